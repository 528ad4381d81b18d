#include "thincode/code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thincode/intlin.hpp"

namespace thincode {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t modulus) {
    std::int64_t r = x % modulus;
    return r < 0 ? r + modulus : r;
}

Word add_words(const Word& a, const Word& b, std::int64_t modulus) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
        if (out[i] >= modulus) out[i] -= modulus;
    }
    return out;
}

bool contains_sorted(const std::vector<Word>& sorted_words, const Word& w) {
    return std::binary_search(sorted_words.begin(), sorted_words.end(), w);
}

// <base ∪ {row}> for a subgroup `base` (sorted): the union of the cosets
// base + j*row for j below the additive order of row.
std::vector<Word> expand_span(const std::vector<Word>& base, const Word& row,
                              std::int64_t modulus) {
    if (contains_sorted(base, row)) return base;
    std::int64_t order = modulus / content_gcd(row, modulus);
    std::vector<Word> out = base;
    out.reserve(base.size() * static_cast<std::size_t>(order));
    Word shift = row;
    for (std::int64_t j = 1; j < order; ++j) {
        for (const Word& w : base) out.push_back(add_words(w, shift, modulus));
        shift = add_words(shift, row, modulus);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t code_content(const LinearCode& c) {
    std::int64_t g = c.modulus();
    for (const Word& w : c.words()) g = std::gcd(g, content_gcd(w, c.modulus()));
    return g;
}

}  // namespace

std::int64_t word_weight(const Word& w) {
    return static_cast<std::int64_t>(std::count_if(w.begin(), w.end(), [](std::int64_t x) { return x != 0; }));
}

std::int64_t height(const Word& w, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    std::int64_t sum = 0;
    for (std::int64_t x : w) sum += reduce(x, modulus);
    if (sum % modulus != 0) throw std::invalid_argument("word is not extended: coordinate sum not divisible by modulus");
    return sum / modulus;
}

GeneratingMatrix::GeneratingMatrix(std::int64_t modulus, std::vector<Word> rows)
    : modulus_(modulus), rows_(std::move(rows)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be >= 1");
    if (rows_.empty()) throw std::invalid_argument("generating matrix needs at least one row");
    length_ = rows_[0].size();
    if (length_ == 0) throw std::invalid_argument("rows must have positive length");
    if (rows_.size() > length_)
        throw std::invalid_argument("more rows than columns; extra rows are redundant, reduce via the word span");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != length_)
            throw std::invalid_argument("row " + std::to_string(r) + " has inconsistent length");
        std::int64_t sum = 0;
        for (auto& x : rows_[r]) {
            x = reduce(x, modulus_);
            sum += x;
        }
        if (sum % modulus_ != 0)
            throw std::invalid_argument("row " + std::to_string(r) +
                                        " is not extended: entries must sum to 0 mod modulus");
    }
}

Word GeneratingMatrix::column(std::size_t i) const {
    Word col(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) col[r] = rows_[r][i];
    return col;
}

LinearCode::LinearCode(std::int64_t modulus, std::size_t length, std::vector<Word> words)
    : modulus_(modulus), length_(length), words_(std::move(words)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be >= 1");
    if (length_ == 0) throw std::invalid_argument("length must be positive");
    for (Word& w : words_) {
        if (w.size() != length_) throw std::invalid_argument("word length mismatch");
        std::int64_t sum = 0;
        for (auto& x : w) {
            x = reduce(x, modulus_);
            sum += x;
        }
        if (sum % modulus_ != 0) throw std::invalid_argument("non-extended word in code");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (words_.empty() || word_weight(words_.front()) != 0)
        throw std::invalid_argument("code must contain the zero word");
    // Closure: the span of the members must not outgrow the set.
    std::vector<Word> span{Word(length_, 0)};
    for (const Word& w : words_) span = expand_span(span, w, modulus_);
    if (span.size() != words_.size())
        throw std::invalid_argument("word set is not closed under addition");
}

LinearCode LinearCode::from_sorted_unchecked(std::int64_t modulus, std::size_t length,
                                             std::vector<Word> words) {
    LinearCode c;
    c.modulus_ = modulus;
    c.length_ = length;
    c.words_ = std::move(words);
    return c;
}

bool LinearCode::contains(const Word& w) const { return contains_sorted(words_, w); }

bool LinearCode::operator<(const LinearCode& rhs) const {
    if (modulus_ != rhs.modulus_) return modulus_ < rhs.modulus_;
    if (length_ != rhs.length_) return length_ < rhs.length_;
    return words_ < rhs.words_;
}

HeightPolynomial::HeightPolynomial(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
    for (std::int64_t c : coeffs_)
        if (c < 0) throw std::invalid_argument("census polynomial coefficients must be non-negative");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t HeightPolynomial::coefficient_sum() const {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

HeightPolynomial HeightPolynomial::operator*(const HeightPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return HeightPolynomial{};
    std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return HeightPolynomial(std::move(out));
}

std::string HeightPolynomial::to_string(char variable) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << coeffs_[k];
            continue;
        }
        if (coeffs_[k] != 1) os << coeffs_[k];
        os << variable;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

LinearCode span_words(const GeneratingMatrix& g) {
    std::vector<Word> words{Word(g.length(), 0)};
    for (const Word& row : g.rows()) words = expand_span(words, row, g.modulus());
    return LinearCode::from_sorted_unchecked(g.modulus(), g.length(), std::move(words));
}

HeightPolynomial hstar(const LinearCode& c) {
    std::vector<std::int64_t> coeffs(c.length(), 0);
    for (const Word& w : c.words()) ++coeffs[static_cast<std::size_t>(height(w, c.modulus()))];
    return HeightPolynomial(std::move(coeffs));
}

HeightPolynomial lstar(const LinearCode& c) {
    std::vector<std::int64_t> coeffs(c.length() + 1, 0);
    const auto n = static_cast<std::int64_t>(c.length());
    for (const Word& w : c.words())
        if (word_weight(w) == n) ++coeffs[static_cast<std::size_t>(height(w, c.modulus()))];
    return HeightPolynomial(std::move(coeffs));
}

HeightPolynomial lstar_by_faces(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n > 20) throw std::invalid_argument("inclusion-exclusion over coordinate subsets is capped at length 20");
    std::vector<std::uint32_t> support(c.word_count());
    std::vector<std::size_t> word_height(c.word_count());
    for (std::size_t i = 0; i < c.word_count(); ++i) {
        const Word& w = c.words()[i];
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (w[j] != 0) mask |= (1u << j);
        support[i] = mask;
        word_height[i] = static_cast<std::size_t>(height(w, c.modulus()));
    }
    std::vector<std::int64_t> acc(n + 1, 0);
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 0; ; ++mask) {
        int sign = ((n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < c.word_count(); ++i)
            if ((support[i] & ~mask) == 0) acc[word_height[i]] += sign;
        if (mask == full) break;
    }
    for (std::int64_t v : acc)
        if (v < 0) throw std::logic_error("face inclusion-exclusion produced a negative coefficient");
    return HeightPolynomial(std::move(acc));
}

HeightPolynomial weight_enumerator(const LinearCode& c) {
    std::vector<std::int64_t> coeffs(c.length() + 1, 0);
    for (const Word& w : c.words()) ++coeffs[static_cast<std::size_t>(word_weight(w))];
    return HeightPolynomial(std::move(coeffs));
}

bool is_thin(const LinearCode& c) {
    const auto n = static_cast<std::int64_t>(c.length());
    for (const Word& w : c.words())
        if (word_weight(w) == n) return false;
    return true;
}

bool coverage_is_thin(const GeneratingMatrix& g) {
    const std::int64_t n_combinations = [&] {
        std::int64_t total = 1;
        for (std::size_t r = 0; r < g.row_count(); ++r) {
            if (total > 100'000'000 / g.modulus())
                throw std::runtime_error("covering check needs N^m combinations; this configuration is too large");
            total *= g.modulus();
        }
        return total;
    }();
    (void)n_combinations;
    std::vector<std::int64_t> a(g.row_count(), 0);
    for (;;) {
        bool covered = false;
        for (std::size_t i = 0; i < g.length() && !covered; ++i) {
            std::int64_t dot = 0;
            for (std::size_t r = 0; r < g.row_count(); ++r) dot += a[r] * g.row(r)[i];
            covered = (dot % g.modulus() == 0);
        }
        if (!covered) return false;
        std::size_t pos = 0;
        while (pos < a.size() && ++a[pos] == g.modulus()) a[pos++] = 0;
        if (pos == a.size()) return true;
    }
}

bool thinness_prefilter(const GeneratingMatrix& g) {
    const std::int64_t n = static_cast<std::int64_t>(g.length());
    const std::int64_t modulus = g.modulus();
    if (modulus == 1 || n == 1) return true;  // only the zero code lives here, and it is thin
    std::int64_t gcd_sum = 0;
    bool zero_column = false;
    for (std::size_t i = 0; i < g.length(); ++i) {
        Word col = g.column(i);
        std::int64_t gi = content_gcd(col, modulus);
        gcd_sum += gi;
        zero_column |= (gi == modulus);
    }
    if (gcd_sum <= modulus) return false;
    // The dimension corollaries assume every column gcd is below N. With p the
    // smallest prime factor (p = N for prime N), thin forces d = n-1 >= p.
    if (!zero_column && n - 1 < smallest_prime_factor(modulus)) return false;
    return true;
}

bool is_degenerate(const LinearCode& c) {
    for (std::size_t i = 0; i < c.length(); ++i) {
        bool all_zero = true;
        for (const Word& w : c.words())
            if (w[i] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return true;
    }
    return false;
}

GeneratingMatrix primitivize(const GeneratingMatrix& g) {
    std::int64_t gamma = g.modulus();
    for (const Word& row : g.rows()) gamma = std::gcd(gamma, content_gcd(row, g.modulus()));
    if (gamma == 1) return g;
    std::vector<Word> rows = g.rows();
    for (Word& row : rows)
        for (auto& x : row) x /= gamma;
    return GeneratingMatrix(g.modulus() / gamma, std::move(rows));
}

LinearCode primitivize(const LinearCode& c) {
    std::int64_t gamma = code_content(c);
    if (gamma == 1) return c;
    std::vector<Word> words = c.words();
    for (Word& w : words)
        for (auto& x : w) x /= gamma;
    std::sort(words.begin(), words.end());
    return LinearCode::from_sorted_unchecked(c.modulus() / gamma, c.length(), std::move(words));
}

std::optional<DirectSumSplit> find_direct_sum(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n < 2 || n > 24) return std::nullopt;
    const std::uint32_t full = (1u << n) - 1;
    auto project = [&](std::uint32_t mask) {
        std::vector<Word> proj;
        proj.reserve(c.word_count());
        for (const Word& w : c.words()) {
            Word p;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) p.push_back(w[i]);
            proj.push_back(std::move(p));
        }
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        return proj;
    };
    for (std::uint32_t mask = 1; mask < full; mask += 2) {  // keep coordinate 0 in part_one
        std::vector<Word> p1 = project(mask);
        std::vector<Word> p2 = project(full & ~mask);
        if (p1.size() * p2.size() != c.word_count()) continue;
        std::vector<std::size_t> part_one, part_two;
        for (std::size_t i = 0; i < n; ++i)
            (mask & (1u << i) ? part_one : part_two).push_back(i);
        // Sizes multiply, so the code is the product of its projections and
        // both projections are extended (the zero word pairs with anything).
        LinearCode factor_one = primitivize(
            LinearCode::from_sorted_unchecked(c.modulus(), part_one.size(), std::move(p1)));
        LinearCode factor_two = primitivize(
            LinearCode::from_sorted_unchecked(c.modulus(), part_two.size(), std::move(p2)));
        return DirectSumSplit{std::move(part_one), std::move(part_two), std::move(factor_one),
                              std::move(factor_two)};
    }
    return std::nullopt;
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    if (code_content(a) != 1 || code_content(b) != 1)
        throw std::invalid_argument("direct_sum expects primitive codes; primitivize first");
    const std::int64_t modulus = std::lcm(a.modulus(), b.modulus());
    const std::int64_t fa = modulus / a.modulus();
    const std::int64_t fb = modulus / b.modulus();
    std::vector<Word> words;
    words.reserve(a.word_count() * b.word_count());
    for (const Word& wa : a.words())
        for (const Word& wb : b.words()) {
            Word w;
            w.reserve(a.length() + b.length());
            for (std::int64_t x : wa) w.push_back(x * fa % modulus);
            for (std::int64_t x : wb) w.push_back(x * fb % modulus);
            words.push_back(std::move(w));
        }
    std::sort(words.begin(), words.end());
    return LinearCode::from_sorted_unchecked(modulus, a.length() + b.length(), std::move(words));
}

std::vector<std::vector<std::size_t>> cayley_partition(const GeneratingMatrix& g) {
    const std::size_t n = g.length();
    if (n > 16) throw std::invalid_argument("cayley_partition subset DP is capped at length 16");
    const std::size_t m = g.row_count();
    const std::uint32_t size = 1u << n;

    // column sums per subset, modulo N, one vector of row sums per mask
    std::vector<std::vector<std::int64_t>> sums(size, std::vector<std::int64_t>(m, 0));
    std::vector<bool> zero_sum(size, false);
    zero_sum[0] = true;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::size_t col = static_cast<std::size_t>(std::countr_zero(low));
        bool all_zero = true;
        for (std::size_t r = 0; r < m; ++r) {
            std::int64_t v = sums[mask ^ low][r] + g.row(r)[col];
            if (v >= g.modulus()) v -= g.modulus();
            sums[mask][r] = v;
            all_zero &= (v == 0);
        }
        zero_sum[mask] = all_zero;
    }

    // best[mask]: max number of zero-sum parts exactly covering mask
    std::vector<int> best(size, -1);
    std::vector<std::uint32_t> choice(size, 0);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;  // the part containing the lowest column decides the split
            if (!zero_sum[sub] || best[mask ^ sub] < 0) continue;
            if (best[mask ^ sub] + 1 > best[mask]) {
                best[mask] = best[mask ^ sub] + 1;
                choice[mask] = sub;
            }
        }
    }

    const std::uint32_t full = size - 1;
    if (best[full] < 0)
        throw std::logic_error("extended rows must admit the one-part partition");
    std::vector<std::vector<std::size_t>> parts;
    for (std::uint32_t mask = full; mask;) {
        std::uint32_t part = choice[mask];
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < n; ++i)
            if (part & (1u << i)) indices.push_back(i);
        parts.push_back(std::move(indices));
        mask ^= part;
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

bool is_spanning(const LinearCode& c) {
    std::vector<Word> span{Word(c.length(), 0)};
    for (const Word& w : c.words()) {
        if (height(w, c.modulus()) != 1) continue;
        span = expand_span(span, w, c.modulus());
        if (span.size() == c.word_count()) return true;
    }
    return span.size() == c.word_count();
}

LinearCode canonical_form(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n > 10)
        throw std::invalid_argument(
            "canonical_form walks all column permutations and is capped at length 10");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Word> best;
    std::vector<Word> scratch(c.word_count(), Word(n, 0));
    do {
        for (std::size_t i = 0; i < c.word_count(); ++i)
            for (std::size_t j = 0; j < n; ++j) scratch[i][j] = c.words()[i][perm[j]];
        std::sort(scratch.begin(), scratch.end());
        if (best.empty() || scratch < best) best = scratch;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return LinearCode::from_sorted_unchecked(c.modulus(), n, std::move(best));
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << 'N' << modulus << ":n" << length << ":w" << word_count << ":h";
    for (std::int64_t c : hstar.coefficients()) os << c << ',';
    os << ":e";
    for (std::int64_t c : weight_enum.coefficients()) os << c << ',';
    return os.str();
}

Fingerprint invariant_fingerprint(const LinearCode& c) {
    return Fingerprint{c.modulus(), c.length(), c.word_count(), hstar(c), weight_enumerator(c)};
}

GeneratingMatrix generators_of(const LinearCode& c) {
    std::vector<Word> current{Word(c.length(), 0)};
    std::vector<Word> rows;
    while (current.size() < c.word_count()) {
        const Word* pick = nullptr;
        std::int64_t pick_order = 0;
        for (const Word& w : c.words()) {
            if (contains_sorted(current, w)) continue;
            std::int64_t order = 1;  // of the image in code/current
            Word acc = w;
            while (!contains_sorted(current, acc)) {
                acc = add_words(acc, w, c.modulus());
                ++order;
            }
            if (order > pick_order) {
                pick_order = order;
                pick = &w;
            }
        }
        rows.push_back(*pick);
        current = expand_span(current, *pick, c.modulus());
    }
    if (rows.empty()) rows.emplace_back(c.length(), 0);
    return GeneratingMatrix(c.modulus(), std::move(rows));
}

}  // namespace thincode
