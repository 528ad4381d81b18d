#include "thincode/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>
#include <utility>

#include "thincode/intlin.hpp"

namespace thincode {

namespace {

std::vector<std::int64_t> normalized_moduli(const SearchConfig& cfg) {
    std::vector<std::int64_t> m = cfg.moduli;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

// Words live in one machine word during enumeration: len digits of `bits`
// bits each, digit i in bits [bits*i, bits*(i+1)). The packed zero word is 0.
struct Packer {
    std::int64_t n_mod;
    std::size_t len;
    unsigned bits;
    std::uint64_t mask;

    Packer(std::int64_t n, std::size_t l)
        : n_mod(n),
          len(l),
          bits(std::bit_width(static_cast<std::uint64_t>(n - 1))),
          mask((std::uint64_t{1} << bits) - 1) {}

    bool fits() const { return static_cast<std::size_t>(bits) * len <= 64; }

    std::uint64_t pack(const Word& w) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < len; ++i)
            out |= static_cast<std::uint64_t>(w[i]) << (bits * i);
        return out;
    }

    Word unpack(std::uint64_t w) const {
        Word out(len);
        for (std::size_t i = 0; i < len; ++i)
            out[i] = static_cast<std::int64_t>((w >> (bits * i)) & mask);
        return out;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t n = static_cast<std::uint64_t>(n_mod);
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t s = ((a >> (bits * i)) & mask) + ((b >> (bits * i)) & mask);
            if (s >= n) s -= n;
            out |= s << (bits * i);
        }
        return out;
    }

    bool has_zero_digit(std::uint64_t w) const {
        for (std::size_t i = 0; i < len; ++i)
            if (((w >> (bits * i)) & mask) == 0) return true;
        return false;
    }
};

void validate(const SearchConfig& cfg, const std::vector<std::int64_t>& moduli) {
    if (cfg.dimension < 1) throw std::invalid_argument("dimension must be at least 1");
    if (cfg.dimension > 9)
        throw std::invalid_argument("dimension above 9 exceeds the canonical-form column cap");
    if (moduli.empty()) throw std::invalid_argument("at least one modulus is required");
    if (moduli.front() < 2) throw std::invalid_argument("moduli must be at least 2");
    if (cfg.max_rows < 1) throw std::invalid_argument("max_rows must be at least 1");
    if (cfg.entry_cap_epsilon < 0) throw std::invalid_argument("entry cap epsilon must be >= 0");
    for (std::int64_t n_mod : moduli) {
        if (n_mod - 1 - cfg.entry_cap_epsilon < 0)
            throw std::invalid_argument("entry cap epsilon leaves no residues for modulus " +
                                        std::to_string(n_mod));
        if (!Packer(n_mod, static_cast<std::size_t>(cfg.dimension) + 1).fits())
            throw std::invalid_argument("modulus " + std::to_string(n_mod) +
                                        " is too large to enumerate at this dimension");
    }
    if (cfg.budget < 1) throw std::invalid_argument("budget must be positive");
    if (cfg.threads < 1) throw std::invalid_argument("thread count must be at least 1");
}

// All extended rows with entries in {0..cap} that contain a zero, built by an
// odometer over the first len-1 entries. Every word of a thin code contains
// a zero, so restricting the row pool this way loses no thin code.
std::vector<Word> candidate_rows(std::int64_t n_mod, std::size_t len, std::int64_t cap) {
    std::vector<Word> out;
    Word w(len, 0);
    while (true) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < len; ++i) sum += w[i];
        w[len - 1] = (n_mod - sum % n_mod) % n_mod;
        if (w[len - 1] <= cap &&
            std::any_of(w.begin(), w.end(), [](std::int64_t e) { return e == 0; }))
            out.push_back(w);
        std::size_t pos = 0;
        while (pos + 1 < len && w[pos] == cap) {
            w[pos] = 0;
            ++pos;
        }
        if (pos + 1 == len) break;
        ++w[pos];
    }
    return out;
}

// A base is a reachable thin span plus its per-column gcds with the modulus.
// The gcds are exact span invariants: the column-i values of a span form the
// subgroup generated by the column entries, so the gcd merges one row at a
// time via std::gcd.
struct Base {
    std::vector<std::uint64_t> words;  // packed, sorted
    std::vector<std::int64_t> column_gcds;
};

// Same predicate as thinness_prefilter, on merged column gcds.
bool prefilter_passes(const std::vector<std::int64_t>& gcds, std::int64_t n_mod) {
    std::int64_t total = 0;
    bool zero_column = false;
    for (std::int64_t g : gcds) {
        total += g;
        zero_column = zero_column || g == n_mod;
    }
    if (total <= n_mod) return false;
    if (!zero_column && static_cast<std::int64_t>(gcds.size()) - 1 < smallest_prime_factor(n_mod))
        return false;
    return true;
}

// Span of base ∪ {row}, assuming base is already a span. Returns false as
// soon as a full-weight word appears: extensions only add words, so such a
// span can never become thin again.
bool extend_span(const Packer& pk, const std::vector<std::uint64_t>& base, std::uint64_t row,
                 std::vector<std::uint64_t>& out) {
    std::vector<std::uint64_t> fresh;
    std::uint64_t shift = row;
    while (shift != 0) {
        for (std::uint64_t b : base) {
            const std::uint64_t w = pk.add(b, shift);
            if (!pk.has_zero_digit(w)) return false;
            fresh.push_back(w);
        }
        shift = pk.add(shift, row);
    }
    out = base;
    out.insert(out.end(), fresh.begin(), fresh.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return true;
}

// Least element of the coset base + row. Zero iff row lies in the base span.
// Rows in one coset generate the same extension and merge to the same column
// gcds, so one representative per coset suffices.
std::uint64_t coset_min(const Packer& pk, const std::vector<std::uint64_t>& base,
                        std::uint64_t row) {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::uint64_t b : base) best = std::min(best, pk.add(b, row));
    return best;
}

std::vector<std::int64_t> merge_gcds(const std::vector<std::int64_t>& gcds, const Word& row) {
    std::vector<std::int64_t> out(gcds.size());
    for (std::size_t i = 0; i < gcds.size(); ++i) out[i] = std::gcd(gcds[i], row[i]);
    return out;
}

bool is_degenerate_gcds(const std::vector<std::int64_t>& gcds, std::int64_t n_mod) {
    return std::any_of(gcds.begin(), gcds.end(), [n_mod](std::int64_t g) { return g == n_mod; });
}

std::string equivalence_name(Equivalence eq) {
    return eq == Equivalence::Full ? "full" : "fingerprint";
}

CodeFlags flags_for(const LinearCode& canonical, std::int64_t dimension,
                    const HeightPolynomial& h) {
    CodeFlags f;
    f.thin = true;
    f.degenerate = false;
    f.direct_sum = false;
    f.spanning = is_spanning(canonical);
    f.width_one = cayley_partition(generators_of(canonical)).size() >= 2;
    f.empty = h.coeff(1) == 0;
    f.hollow = true;  // thin codes describe simplices without interior points
    f.trivially_thin = 2 * static_cast<std::int64_t>(h.degree()) <= dimension;
    return f;
}

CodeRecord make_record(const LinearCode& code, std::int64_t dimension, std::string config_id) {
    LinearCode canonical = canonical_form(code);
    HeightPolynomial h = hstar(canonical);
    HeightPolynomial w = weight_enumerator(canonical);
    CodeFlags flags = flags_for(canonical, dimension, h);
    GeneratingMatrix generators = generators_of(canonical);
    return CodeRecord{canonical.modulus(), std::move(generators), std::move(canonical),
                      std::move(h),        std::move(w),          flags,
                      std::move(config_id)};
}

// One modulus worth of enumeration. `spent` carries the candidate budget
// across moduli; the emitted_* stores deduplicate across everything.
void enumerate_modulus(const SearchConfig& cfg, std::int64_t n_mod, const std::string& config_id,
                       std::int64_t& spent, std::set<LinearCode>& emitted_full,
                       std::set<Fingerprint>& emitted_prints, std::vector<CodeRecord>& records) {
    const std::size_t len = static_cast<std::size_t>(cfg.dimension) + 1;
    const std::size_t max_rows = static_cast<std::size_t>(cfg.max_rows);
    const Packer pk(n_mod, len);

    // Emitted codes have no zero column, and with fewer columns than the
    // smallest prime factor nothing zero-column-free can be thin.
    if (cfg.use_thinness_prefilter &&
        static_cast<std::int64_t>(len) - 1 < smallest_prime_factor(n_mod))
        return;

    const std::vector<Word> row_words =
        candidate_rows(n_mod, len, n_mod - 1 - cfg.entry_cap_epsilon);
    if (row_words.empty()) return;
    std::vector<std::uint64_t> rows(row_words.size());
    for (std::size_t i = 0; i < row_words.size(); ++i) rows[i] = pk.pack(row_words[i]);

    auto charge = [&](std::int64_t amount) {
        spent += amount;
        if (spent > cfg.budget)
            throw BudgetExceeded("candidate budget of " + std::to_string(cfg.budget) +
                                 " exceeded at modulus " + std::to_string(n_mod) +
                                 "; raise the budget to search this configuration");
    };

    std::set<std::vector<std::uint64_t>> seen;

    auto emit_if_eligible = [&](const std::vector<std::uint64_t>& span,
                                const std::vector<std::int64_t>& gcds) {
        std::int64_t content = n_mod;
        for (std::int64_t g : gcds) content = std::gcd(content, g);
        if (content != 1) return;
        std::vector<Word> words;
        words.reserve(span.size());
        for (std::uint64_t w : span) words.push_back(pk.unpack(w));
        std::sort(words.begin(), words.end());
        LinearCode code = LinearCode::from_sorted_unchecked(n_mod, len, std::move(words));
        if (find_direct_sum(code).has_value()) return;
        if (cfg.equivalence == Equivalence::Full) {
            LinearCode canonical = canonical_form(code);
            if (emitted_full.insert(canonical).second)
                records.push_back(make_record(canonical, cfg.dimension, config_id));
        } else if (emitted_prints.insert(invariant_fingerprint(code)).second) {
            records.push_back(make_record(code, cfg.dimension, config_id));
        }
    };

    // Deduplicates, emits, and decides whether the span seeds the next level.
    auto absorb = [&](std::vector<std::uint64_t>&& grown, std::vector<std::int64_t>&& gcds,
                      std::size_t grown_rows, std::vector<Base>& sink) {
        if (!seen.insert(grown).second) return;
        const bool degenerate = is_degenerate_gcds(gcds, n_mod);
        if (!degenerate) emit_if_eligible(grown, gcds);
        if (grown_rows >= max_rows) return;
        if (cfg.skip_pyramid_bases_from_row_three && grown_rows >= 2 && degenerate) return;
        sink.push_back(Base{std::move(grown), std::move(gcds)});
    };

    // Level 1: one representative per column-permutation class of single
    // rows, i.e. the non-increasing ones. Later rows are unrestricted, so
    // every class stays reachable up to permutation, which the canonical
    // (or fingerprint) emission step collapses anyway.
    charge(static_cast<std::int64_t>(rows.size()));
    std::vector<Base> bases;
    const std::vector<std::uint64_t> origin{0};
    const std::vector<std::int64_t> origin_gcds(len, n_mod);
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const Word& row = row_words[ri];
        if (!std::is_sorted(row.rbegin(), row.rend())) continue;
        std::vector<std::int64_t> gcds = merge_gcds(origin_gcds, row);
        if (cfg.use_thinness_prefilter && !prefilter_passes(gcds, n_mod)) continue;
        std::vector<std::uint64_t> grown;
        if (!extend_span(pk, origin, rows[ri], grown)) continue;
        absorb(std::move(grown), std::move(gcds), 1, bases);
    }

    // Levels 2 and up: workers grow spans for a block of bases, then the
    // order-sensitive dedup and emission run sequentially in (base, row)
    // order, so the result matches a single-threaded run exactly.
    const std::size_t workers_wanted = static_cast<std::size_t>(cfg.threads);
    constexpr std::size_t kBlock = 4096;
    for (std::size_t level = 2; level <= max_rows && !bases.empty(); ++level) {
        charge(static_cast<std::int64_t>(bases.size()) * static_cast<std::int64_t>(rows.size()));
        std::vector<Base> next;
        for (std::size_t start = 0; start < bases.size(); start += kBlock) {
            const std::size_t stop = std::min(start + kBlock, bases.size());
            std::vector<std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>>>
                grown_per_base(stop - start);
            auto grow_range = [&](std::size_t first, std::size_t step) {
                std::unordered_set<std::uint64_t> cosets_done;
                for (std::size_t b = start + first; b < stop; b += step) {
                    auto& sink = grown_per_base[b - start];
                    const Base& base = bases[b];
                    cosets_done.clear();
                    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
                        if (cfg.use_thinness_prefilter &&
                            !prefilter_passes(merge_gcds(base.column_gcds, row_words[ri]), n_mod))
                            continue;
                        const std::uint64_t key = coset_min(pk, base.words, rows[ri]);
                        if (key == 0 || !cosets_done.insert(key).second) continue;
                        std::vector<std::uint64_t> grown;
                        if (!extend_span(pk, base.words, rows[ri], grown)) continue;
                        // `seen` is read-only during the parallel phase
                        if (seen.count(grown)) continue;
                        sink.emplace_back(ri, std::move(grown));
                    }
                }
            };
            const std::size_t active = std::min(workers_wanted, stop - start);
            if (active <= 1) {
                grow_range(0, 1);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(active);
                for (std::size_t t = 0; t < active; ++t) pool.emplace_back(grow_range, t, active);
                for (std::thread& t : pool) t.join();
            }
            for (std::size_t b = start; b < stop; ++b)
                for (auto& [ri, grown] : grown_per_base[b - start])
                    absorb(std::move(grown), merge_gcds(bases[b].column_gcds, row_words[ri]),
                           level, next);
        }
        bases = std::move(next);
    }
}

}  // namespace

std::string config_identifier(const SearchConfig& cfg) {
    const std::vector<std::int64_t> moduli = normalized_moduli(cfg);
    std::ostringstream out;
    out << "d=" << cfg.dimension << ";N=";
    for (std::size_t i = 0; i < moduli.size(); ++i) out << (i ? "," : "") << moduli[i];
    out << ";rows=" << cfg.max_rows << ";eps=" << cfg.entry_cap_epsilon
        << ";eq=" << equivalence_name(cfg.equivalence)
        << ";skip-pyramids=" << (cfg.skip_pyramid_bases_from_row_three ? 1 : 0)
        << ";prefilter=" << (cfg.use_thinness_prefilter ? 1 : 0) << ";budget=" << cfg.budget;
    return out.str();
}

std::vector<CodeRecord> enumerate_thin_codes(const SearchConfig& cfg) {
    const std::vector<std::int64_t> moduli = normalized_moduli(cfg);
    validate(cfg, moduli);
    const std::string config_id = config_identifier(cfg);

    std::int64_t spent = 0;
    std::set<LinearCode> emitted_full;
    std::set<Fingerprint> emitted_prints;
    std::vector<CodeRecord> records;
    for (std::int64_t n_mod : moduli)
        enumerate_modulus(cfg, n_mod, config_id, spent, emitted_full, emitted_prints, records);

    std::sort(records.begin(), records.end(), [](const CodeRecord& a, const CodeRecord& b) {
        if (a.modulus != b.modulus) return a.modulus < b.modulus;
        return a.canonical < b.canonical;
    });
    return records;
}

std::vector<CodeRecord> classify_d4(std::int64_t threads) {
    SearchConfig cfg;
    cfg.dimension = 4;
    cfg.moduli = {2, 3, 4, 5, 6, 7, 8};
    cfg.max_rows = 4;
    cfg.threads = threads > 0
                      ? threads
                      : std::max<std::int64_t>(1, std::thread::hardware_concurrency());
    return enumerate_thin_codes(cfg);
}

std::vector<GeneratingMatrix> d4_reference_generators() {
    std::vector<GeneratingMatrix> out;
    out.emplace_back(2, std::vector<Word>{{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0},
                                          {0, 0, 0, 1, 1}});
    out.emplace_back(3, std::vector<Word>{{0, 0, 1, 1, 1}, {1, 2, 0, 1, 2}});
    out.emplace_back(4, std::vector<Word>{{0, 0, 1, 1, 2}, {2, 2, 1, 3, 0}});
    out.emplace_back(4, std::vector<Word>{{0, 1, 1, 1, 1}, {2, 0, 1, 2, 3}});
    out.emplace_back(4, std::vector<Word>{{0, 0, 1, 1, 2}, {2, 2, 0, 2, 2}, {0, 2, 3, 3, 0}});
    out.emplace_back(8, std::vector<Word>{{4, 0, 1, 2, 1}, {4, 4, 0, 4, 4}});
    for (std::int64_t n : {2, 4, 6, 8})
        out.emplace_back(n,
                         std::vector<Word>{{n / 2, 0, n / 2, 0, 0}, {0, n / 2, n / 2, 1, n - 1}});
    return out;
}

CodeRecord family_member(std::int64_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("the family is defined for even moduli n >= 2");
    GeneratingMatrix g(n, {{n / 2, 0, n / 2, 0, 0}, {0, n / 2, n / 2, 1, n - 1}});
    return make_record(span_words(g), 4, "family:n=" + std::to_string(n));
}

}  // namespace thincode
