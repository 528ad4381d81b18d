#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thincode {

// One codeword over Z_N, entries kept as representatives in {0,...,N-1}.
using Word = std::vector<std::int64_t>;

std::int64_t word_weight(const Word& w);  // number of nonzero coordinates

// (sum of representatives) / modulus; rejects words whose sum is not
// divisible by the modulus (only extended words have a height).
std::int64_t height(const Word& w, std::int64_t modulus);

// Generator rows for an extended linear code over Z_N. Every row must sum to
// 0 mod N, all rows share one length, and there are never more rows than
// columns (extra rows are redundant; reduce through the word span instead).
class GeneratingMatrix {
public:
    GeneratingMatrix(std::int64_t modulus, std::vector<Word> rows);

    std::int64_t modulus() const { return modulus_; }
    std::size_t length() const { return length_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<Word>& rows() const { return rows_; }
    const Word& row(std::size_t i) const { return rows_[i]; }
    Word column(std::size_t i) const;

    bool operator==(const GeneratingMatrix&) const = default;

private:
    std::int64_t modulus_;
    std::size_t length_;
    std::vector<Word> rows_;
};

// Full word set of an extended linear code over Z_N: contains the zero word,
// every word sums to 0 mod N, and the set is closed under addition. Words are
// stored sorted for binary search and cheap equality.
class LinearCode {
public:
    // Validates everything, including closure (cost grows with the word count).
    LinearCode(std::int64_t modulus, std::size_t length, std::vector<Word> words);

    // Trusts the caller: words must already be sorted, unique, closed,
    // extended, and reduced. Internal fast path for span construction.
    static LinearCode from_sorted_unchecked(std::int64_t modulus, std::size_t length,
                                            std::vector<Word> words);

    std::int64_t modulus() const { return modulus_; }
    std::size_t length() const { return length_; }
    std::size_t word_count() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    bool contains(const Word& w) const;

    bool operator==(const LinearCode&) const = default;
    bool operator<(const LinearCode& rhs) const;

private:
    LinearCode() = default;
    std::int64_t modulus_ = 1;
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

// Height (or weight) census polynomial with non-negative integer
// coefficients, stored lowest degree first and trimmed.
class HeightPolynomial {
public:
    HeightPolynomial() = default;  // zero polynomial
    explicit HeightPolynomial(std::vector<std::int64_t> coefficients);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    std::int64_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    std::int64_t coefficient_sum() const;
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    HeightPolynomial operator*(const HeightPolynomial& rhs) const;
    bool operator==(const HeightPolynomial&) const = default;
    auto operator<=>(const HeightPolynomial&) const = default;

    std::string to_string(char variable = 't') const;  // e.g. "1 + 3t + 2t^2"

private:
    std::vector<std::int64_t> coeffs_;
};

// Subgroup of Z_N^n generated by the rows.
LinearCode span_words(const GeneratingMatrix& g);

// Height census of all words: coefficient k counts words of height k. For the
// simplex behind the code this is the h*-polynomial.
HeightPolynomial hstar(const LinearCode& c);

// Height census of the full-weight words only (the box polynomial l*). A code
// is thin exactly when this vanishes.
HeightPolynomial lstar(const LinearCode& c);

// Same value as lstar, computed the slow way: inclusion-exclusion of hstar
// over all coordinate subsets. Independent cross-check, exponential in length.
HeightPolynomial lstar_by_faces(const LinearCode& c);

// Coefficient k counts words of weight k.
HeightPolynomial weight_enumerator(const LinearCode& c);

// No word of maximal weight (every word has a zero coordinate).
bool is_thin(const LinearCode& c);

// Thinness decided without spanning: the coefficient-vector space Z_N^m is
// thin-covered iff every combination vector annihilates some column. Walks
// all N^m combinations, so only sensible for small m.
bool coverage_is_thin(const GeneratingMatrix& g);

// Cheap necessary condition for thinness. False guarantees the span is not
// thin; true decides nothing. Rules: sum of column gcds must exceed N, and
// when no column is all zero, N prime forces n-1 >= N and in general n-1 must
// reach the smallest prime factor of N. (The prime rules assume every column
// gcd is below N, hence the zero-column gate.)
bool thinness_prefilter(const GeneratingMatrix& g);

// Some coordinate is zero in every word (the simplex is a lattice pyramid).
bool is_degenerate(const LinearCode& c);

// Divide out the common content: returns generators over N/gamma with every
// entry divided by gamma, where gamma is the gcd of all span entries and N.
// (The span content equals the row content: rows are words, and every span
// entry is a Z-combination of row entries mod N.)
GeneratingMatrix primitivize(const GeneratingMatrix& g);
LinearCode primitivize(const LinearCode& c);

// Coordinate bipartition on which the code factors, plus the primitivized
// factor codes. part_one always holds coordinate 0.
struct DirectSumSplit {
    std::vector<std::size_t> part_one;
    std::vector<std::size_t> part_two;
    LinearCode factor_one;
    LinearCode factor_two;
};

// First bipartition (in mask order) whose projection sizes multiply to the
// word count, i.e. the code is the product of its two projections. Finer
// decompositions follow by recursing on the factors.
std::optional<DirectSumSplit> find_direct_sum(const LinearCode& c);

// Concatenation {(f1*a | f2*b)} over lcm(N1,N2) with fi = lcm/Ni; the code of
// the free join of the two underlying simplices. Inputs must be primitive.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

// Partition of the coordinates into the maximum number of parts such that
// every generator row sums to 0 mod N on each part (by linearity every word
// then does too). Size m of the partition = the simplex is a Cayley simplex
// of m lattice polytopes; size >= 2 is equivalent to lattice width 1.
// Exact subset DP; length is capped at 16.
std::vector<std::vector<std::size_t>> cayley_partition(const GeneratingMatrix& g);

// The height-1 words generate the whole code.
bool is_spanning(const LinearCode& c);

// Lexicographically least sorted word list over all column permutations.
// Codes are isomorphic iff their canonical forms are equal. Brute force over
// n! permutations; length is capped at 10.
LinearCode canonical_form(const LinearCode& c);

// Cheap isomorphism invariants; equal fingerprints do not imply isomorphism.
struct Fingerprint {
    std::int64_t modulus = 1;
    std::size_t length = 0;
    std::size_t word_count = 0;
    HeightPolynomial hstar;
    HeightPolynomial weight_enum;

    bool operator==(const Fingerprint&) const = default;
    auto operator<=>(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint invariant_fingerprint(const LinearCode& c);

// Minimal generating rows recovered from the word set (greedy maximal
// quotient order, deterministic). The zero code yields one zero row.
GeneratingMatrix generators_of(const LinearCode& c);

}  // namespace thincode
