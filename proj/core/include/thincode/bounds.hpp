#pragma once

#include <cstdint>

namespace thincode {

// The count of gcd-1 tuples summing to 1 is ambiguous in the source material:
// the set definition gives m (one tuple per position of the single 1), the
// totient identity c_i(2) = phi(i) would give 1. Both are implemented; the
// threshold-table reproduction test fixes TupleCount as the default.
enum class CompositionConvention {
    TupleCount,
    TotientLike,
};

// Number of m-tuples of non-negative integers with sum i and gcd 1, by
// Mobius inversion over binomial composition counts. m >= 2, i >= 1.
std::int64_t coprime_compositions(
    std::int64_t m, std::int64_t i,
    CompositionConvention convention = CompositionConvention::TupleCount);

// k: number of complete sum-levels consumed when picking the n+1 gcd-1
// tuples with smallest entry sums; s: total of those n+1 sums.
struct StepCount {
    std::int64_t k = 0;
    std::int64_t s = 0;

    bool operator==(const StepCount&) const = default;
};

StepCount s_z(std::int64_t m, std::int64_t n,
              CompositionConvention convention = CompositionConvention::TupleCount);

struct BoundTable {
    std::int64_t m = 0;
    std::int64_t threshold_integer = 0;  // largest n with s_z(m,n).s <= m*n
    std::int64_t threshold_prime = 0;    // largest prime <= threshold_integer
    CompositionConvention convention = CompositionConvention::TupleCount;

    bool operator==(const BoundTable&) const = default;
};

// Largest n with s_z(m,n).s <= m*n, found by forward scan; the scan stops
// once the per-step growth k+1 permanently exceeds m. m in 2..7. Throws
// std::runtime_error when no n qualifies under the given convention.
BoundTable n_m_bound(std::int64_t m,
                     CompositionConvention convention = CompositionConvention::TupleCount);

// The convention whose thresholds reproduce the reference prime table for
// m = 2..7 (the metadata reported alongside bound output).
CompositionConvention resolve_convention();

}  // namespace thincode
