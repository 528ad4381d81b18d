#include "thincode/intlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thincode {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    return out;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[a] -= q * row[b]
void add_row_multiple(IntegerMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(a, c) -= q * m.at(b, c);
}

void add_col_multiple(IntegerMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, a) -= q * m.at(r, b);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    IntegerMatrix work = a;
    IntegerMatrix left = IntegerMatrix::identity(a.rows());
    IntegerMatrix right = IntegerMatrix::identity(a.cols());
    const std::size_t bound = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < bound; ++t) {
        // Locate the minimal nonzero entry of the trailing block.
        std::size_t pr = t, pc = t;
        bool found = false;
        BigInt best;
        for (std::size_t r = t; r < work.rows(); ++r)
            for (std::size_t c = t; c < work.cols(); ++c) {
                if (work.at(r, c) == 0) continue;
                BigInt mag = abs_big(work.at(r, c));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (!found) break;
        swap_rows(work, t, pr);
        swap_rows(left, t, pr);
        swap_cols(work, t, pc);
        swap_cols(right, t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < work.rows(); ++r) {
                if (work.at(r, t) == 0) continue;
                BigInt q = work.at(r, t) / work.at(t, t);
                add_row_multiple(work, r, t, q);
                add_row_multiple(left, r, t, q);
                if (work.at(r, t) != 0) {
                    // Remainder is strictly smaller; promote it to pivot.
                    swap_rows(work, t, r);
                    swap_rows(left, t, r);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (std::size_t c = t + 1; c < work.cols(); ++c) {
                if (work.at(t, c) == 0) continue;
                BigInt q = work.at(t, c) / work.at(t, t);
                add_col_multiple(work, c, t, q);
                add_col_multiple(right, c, t, q);
                if (work.at(t, c) != 0) {
                    swap_cols(work, t, c);
                    swap_cols(right, t, c);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Pivot must divide the whole trailing block for the divisor chain.
            bool fixed = false;
            for (std::size_t r = t + 1; r < work.rows() && !fixed; ++r)
                for (std::size_t c = t + 1; c < work.cols() && !fixed; ++c)
                    if (work.at(r, c) % work.at(t, t) != 0) {
                        add_row_multiple(work, t, r, BigInt(-1));
                        add_row_multiple(left, t, r, BigInt(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (work.at(t, t) < 0) {
            negate_row(work, t);
            negate_row(left, t);
        }
    }

    std::vector<BigInt> diag(bound);
    for (std::size_t i = 0; i < bound; ++i) diag[i] = work.at(i, i);
    return SmithDecomposition{std::move(left), std::move(diag), std::move(right)};
}

IntegerMatrix row_hermite_form(const IntegerMatrix& a) {
    IntegerMatrix work = a;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
        // Euclid on the rows at and below pivot_row until one nonzero survives.
        for (;;) {
            std::size_t best_row = work.rows();
            for (std::size_t r = pivot_row; r < work.rows(); ++r) {
                if (work.at(r, col) == 0) continue;
                if (best_row == work.rows() ||
                    abs_big(work.at(r, col)) < abs_big(work.at(best_row, col)))
                    best_row = r;
            }
            if (best_row == work.rows()) break;  // column clean
            swap_rows(work, pivot_row, best_row);
            bool reduced_all = true;
            for (std::size_t r = pivot_row + 1; r < work.rows(); ++r) {
                if (work.at(r, col) == 0) continue;
                BigInt q = work.at(r, col) / work.at(pivot_row, col);
                add_row_multiple(work, r, pivot_row, q);
                if (work.at(r, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (work.at(pivot_row, col) == 0) continue;
        if (work.at(pivot_row, col) < 0) negate_row(work, pivot_row);
        const BigInt& p = work.at(pivot_row, col);
        for (std::size_t r = 0; r < pivot_row; ++r) {
            // Floor division keeps the reduced entry in [0, p).
            BigInt q = work.at(r, col) / p;
            if (work.at(r, col) - q * p < 0) q -= 1;
            add_row_multiple(work, r, pivot_row, q);
        }
        ++pivot_row;
    }
    return work;
}

BigInt determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
    const std::size_t n = a.rows();
    IntegerMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_with = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    swap_with = r;
                    break;
                }
            if (swap_with == n) return 0;
            swap_rows(m, k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

std::optional<std::vector<BigInt>> solve_integer(const IntegerMatrix& a,
                                                 const std::vector<BigInt>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length does not match matrix");
    SmithDecomposition snf = smith_normal_form(a);
    // a = left^-1 D right^-1; solve D y = left*b, then x = right*y.
    std::vector<BigInt> ub(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < a.rows(); ++c) acc += snf.left.at(r, c) * b[c];
        ub[r] = acc;
    }
    std::vector<BigInt> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt d = i < snf.diag.size() ? snf.diag[i] : BigInt(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
            continue;
        }
        if (ub[i] % d != 0) return std::nullopt;
        if (i < a.cols()) y[i] = ub[i] / d;
    }
    std::vector<BigInt> x(a.cols());
    for (std::size_t r = 0; r < a.cols(); ++r) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += snf.right.at(r, c) * y[c];
        x[r] = acc;
    }
    return x;
}

std::int64_t content_gcd(std::span<const std::int64_t> entries, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    std::int64_t g = modulus;
    for (std::int64_t e : entries) {
        std::int64_t r = e % modulus;
        if (r < 0) r += modulus;
        g = std::gcd(g, r);
    }
    return g;
}

int mobius(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("mobius requires k >= 1");
    int primes = 0;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        ++primes;
    }
    if (k > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor requires n >= 2");
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

std::int64_t closest_prime_at_most(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("no prime <= 1 exists");
    for (std::int64_t k = n; k >= 2; --k)
        if (is_prime(k)) return k;
    return 2;  // unreachable
}

}  // namespace thincode
