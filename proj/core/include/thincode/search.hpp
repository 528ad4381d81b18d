#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "thincode/code.hpp"

namespace thincode {

enum class Equivalence {
    Full,         // one record per column-permutation class
    Fingerprint,  // one record per (modulus, hstar, weight enumerator) class
};

struct SearchConfig {
    std::int64_t dimension = 4;        // simplex dimension; codes have dimension+1 columns
    std::vector<std::int64_t> moduli;  // values of N to enumerate, each >= 2
    std::int64_t max_rows = 4;
    std::int64_t entry_cap_epsilon = 0;  // row entries drawn from {0, ..., N-1-epsilon}
    Equivalence equivalence = Equivalence::Full;
    bool skip_pyramid_bases_from_row_three = false;  // lossy shortcut, off by default
    bool use_thinness_prefilter = true;              // pruning only; output must not change
    std::int64_t budget = 100'000'000;               // candidate-matrix cap
    std::int64_t threads = 1;

    bool operator==(const SearchConfig&) const = default;
};

struct CodeFlags {
    bool thin = false;
    bool degenerate = false;
    bool direct_sum = false;
    bool spanning = false;
    bool width_one = false;
    bool empty = false;
    bool hollow = false;
    bool trivially_thin = false;

    bool operator==(const CodeFlags&) const = default;
};

// Not default-constructible; build with full aggregate initialization.
struct CodeRecord {
    std::int64_t modulus;
    GeneratingMatrix generators;  // derived from the canonical words; deterministic
    LinearCode canonical;
    HeightPolynomial hstar;
    HeightPolynomial weight_enum;
    CodeFlags flags;
    std::string config_id;

    bool operator==(const CodeRecord&) const = default;
};

// Raised instead of truncating when the configured candidate budget would be
// exceeded; no partial results are returned.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Provenance key: every config field that can change the result set, in a
// fixed order. Thread count is deliberately excluded.
std::string config_identifier(const SearchConfig& cfg);

// Every thin, non-degenerate, non-direct-sum primitive code over the
// configured moduli reachable by growing generator matrices one
// zero-containing extended row at a time, deduplicated per cfg.equivalence
// and sorted by (modulus, canonical words). Deterministic for a fixed config
// regardless of thread count.
std::vector<CodeRecord> enumerate_thin_codes(const SearchConfig& cfg);

// The fixed four-dimensional classification run: N in 2..8, at most 4 rows,
// no entry cap, full equivalence. Returns the 10 classes. threads = 0 picks
// the hardware concurrency.
std::vector<CodeRecord> classify_d4(std::int64_t threads = 0);

// Reference generators the classify_d4 output is diffed against: the six
// sporadic classes plus the parametric family at N = 2, 4, 6, 8.
std::vector<GeneratingMatrix> d4_reference_generators();

// The two-row family member over Z_n (n even): thin, width one, not a direct
// sum, hstar = 1 + (n/2) t + (3n/2 - 1) t^2.
CodeRecord family_member(std::int64_t n);

}  // namespace thincode
