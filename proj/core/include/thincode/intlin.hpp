#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thincode {

// Exact arbitrary-precision integer. Smith normal form intermediates can
// outgrow 64 bits even for small inputs, so all dense matrix work uses this.
using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    bool operator==(const IntegerMatrix& rhs) const = default;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;  // row-major
};

// left * a * right = diagonal(diag), left and right unimodular, diag entries
// non-negative with diag[i] dividing diag[i+1]. diag has min(rows, cols) entries
// (trailing zeros kept so callers can see the rank).
struct SmithDecomposition {
    IntegerMatrix left;
    std::vector<BigInt> diag;
    IntegerMatrix right;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Row-style Hermite form H = U*a for unimodular U: row echelon, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows sink to
// the bottom. Row space is preserved, so the nonzero rows are a lattice basis
// for the row span.
IntegerMatrix row_hermite_form(const IntegerMatrix& a);

// Exact determinant (fraction-free Bareiss elimination). Square input only.
BigInt determinant(const IntegerMatrix& a);

// One integer solution x of a*x = b, or nullopt when none exists. When the
// columns of a are independent the solution is unique.
std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& a,
                                                 const std::vector<BigInt>& b);

// gcd of the entries (taken as representatives in {0,...,modulus-1}) together
// with the modulus. Empty input or all-zero input gives the modulus itself.
std::int64_t content_gcd(std::span<const std::int64_t> entries, std::int64_t modulus);

// Moebius function; k >= 1.
int mobius(std::int64_t k);

bool is_prime(std::int64_t n);
std::int64_t smallest_prime_factor(std::int64_t n);  // n >= 2

// Largest prime <= n; requires n >= 2.
std::int64_t closest_prime_at_most(std::int64_t n);

}  // namespace thincode
