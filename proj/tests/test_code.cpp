#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "thincode/code.hpp"
#include "thincode/intlin.hpp"

using namespace thincode;
using thincode::testing::interval_code;
using thincode::testing::matrix;
using thincode::testing::random_matrix;
using thincode::testing::span;
using thincode::testing::twice_triangle;

namespace {

HeightPolynomial poly(std::vector<std::int64_t> c) { return HeightPolynomial(std::move(c)); }

// Two-row generators over Z_N (N even) whose span is thin but neither
// degenerate, decomposable, nor spanning. Used across several tests.
GeneratingMatrix half_pair(std::int64_t n) {
    const std::int64_t h = n / 2;
    return matrix(n, {{h, 0, h, 0, 0}, {0, h, h, 1, n - 1}});
}

// Catalog of thin five-column codes with hand-computed censuses.
struct CatalogEntry {
    GeneratingMatrix gen;
    std::vector<std::int64_t> hstar;
    std::size_t size;
};

std::vector<CatalogEntry> thin_catalog() {
    return {
        {matrix(2, {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}}),
         {1, 10, 5},
         16},
        {matrix(3, {{0, 0, 1, 1, 1}, {1, 2, 0, 1, 2}}), {1, 1, 7}, 9},
        {matrix(4, {{0, 0, 1, 1, 2}, {2, 2, 1, 3, 0}}), {1, 2, 5}, 8},
        {matrix(4, {{0, 1, 1, 1, 1}, {2, 0, 1, 2, 3}}), {1, 3, 11, 1}, 16},
        {matrix(4, {{0, 0, 1, 1, 2}, {2, 2, 0, 2, 2}, {0, 2, 3, 3, 0}}), {1, 6, 9}, 16},
        {matrix(8, {{4, 0, 1, 2, 1}, {4, 4, 0, 4, 4}}), {1, 3, 11, 1}, 16},
    };
}

LinearCode permuted(const LinearCode& c, const std::vector<std::size_t>& perm) {
    std::vector<Word> out;
    out.reserve(c.word_count());
    for (const Word& w : c.words()) {
        Word p(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) p[i] = w[perm[i]];
        out.push_back(std::move(p));
    }
    return LinearCode(c.modulus(), c.length(), std::move(out));
}

// All set partitions of {0..n-1}, each as blocks of ascending indices.
void all_partitions(std::size_t n, std::size_t next, std::vector<std::vector<std::size_t>>& cur,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
    if (next == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t bi = 0; bi < cur.size(); ++bi) {
        cur[bi].push_back(next);
        all_partitions(n, next + 1, cur, out);
        cur[bi].pop_back();
    }
    cur.push_back({next});
    all_partitions(n, next + 1, cur, out);
    cur.pop_back();
}

bool blocks_zero_sum(const GeneratingMatrix& g, const std::vector<std::vector<std::size_t>>& parts) {
    for (const auto& part : parts)
        for (const Word& row : g.rows()) {
            std::int64_t s = 0;
            for (std::size_t i : part) s += row[i];
            if (s % g.modulus() != 0) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("word_weight counts nonzero coordinates") {
    CHECK(word_weight({0, 0, 0}) == 0);
    CHECK(word_weight({0, 1, 0, 2}) == 2);
    CHECK(word_weight({3, 1, 2}) == 3);
}

TEST_CASE("height of an extended word is its entry sum over the modulus") {
    CHECK(height({0, 0, 0}, 2) == 0);
    CHECK(height({1, 1, 0}, 2) == 1);
    CHECK(height({1, 1, 0, 1, 1}, 2) == 2);
    CHECK(height({2, 2, 2, 2}, 4) == 2);
    CHECK_THROWS_AS(height({1, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("GeneratingMatrix validates and reduces its rows") {
    GeneratingMatrix g = matrix(4, {{5, 3, 0}});
    CHECK(g.row(0) == Word{1, 3, 0});
    GeneratingMatrix neg = matrix(4, {{-1, 1, 0}});
    CHECK(neg.row(0) == Word{3, 1, 0});
    CHECK(neg.column(0) == Word{3});

    CHECK_THROWS_AS(matrix(4, {{1, 1, 0}}), std::invalid_argument);           // sum not 0 mod 4
    CHECK_THROWS_AS(matrix(4, {{1, 3}, {1, 1, 2}}), std::invalid_argument);   // ragged rows
    CHECK_THROWS_AS(matrix(0, {{0, 0}}), std::invalid_argument);              // bad modulus
    CHECK_THROWS_AS(matrix(4, {}), std::invalid_argument);                    // no rows
    CHECK_THROWS_AS(matrix(2, {{1, 1}, {0, 0}, {1, 1}}), std::invalid_argument);  // m > n
}

TEST_CASE("LinearCode constructor enforces code structure") {
    // fine: the two-word code over Z2
    LinearCode ok(2, 2, {{0, 0}, {1, 1}});
    CHECK(ok.word_count() == 2);
    CHECK(ok.contains({1, 1}));
    CHECK_FALSE(ok.contains({1, 0}));

    CHECK_THROWS_AS(LinearCode(2, 2, {{1, 1}}), std::invalid_argument);          // missing zero
    CHECK_THROWS_AS(LinearCode(2, 2, {{0, 0}, {1, 0}}), std::invalid_argument);  // not extended
    CHECK_THROWS_AS(LinearCode(4, 2, {{0, 0}, {1, 3}}), std::invalid_argument);  // not closed
    // duplicate words collapse
    LinearCode dup(2, 2, {{0, 0}, {1, 1}, {1, 1}});
    CHECK(dup.word_count() == 2);
}

TEST_CASE("span_words produces the generated code") {
    LinearCode tri = twice_triangle();
    CHECK(tri.words() == std::vector<Word>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    LinearCode fam2 = span_words(half_pair(2));
    CHECK(fam2.words() == std::vector<Word>{{0, 0, 0, 0, 0},
                                            {0, 1, 1, 1, 1},
                                            {1, 0, 1, 0, 0},
                                            {1, 1, 0, 1, 1}});

    CHECK(span_words(half_pair(6)).word_count() == 12);
    CHECK(span_words(half_pair(10)).word_count() == 20);

    for (const auto& entry : thin_catalog()) CHECK(span_words(entry.gen).word_count() == entry.size);
}

TEST_CASE("hstar matches hand-computed censuses") {
    CHECK(hstar(twice_triangle()) == poly({1, 3}));
    for (const auto& entry : thin_catalog()) CHECK(hstar(span_words(entry.gen)) == poly(entry.hstar));
    CHECK(hstar(span_words(half_pair(10))) == poly({1, 5, 14}));
    for (std::int64_t n = 2; n <= 7; ++n) CHECK(hstar(interval_code(n)) == poly({1, n - 1}));
}

TEST_CASE("hstar structure: unit constant, total mass, degree bound") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 7);
        std::size_t len = 2 + rng() % 5;
        std::size_t m = 1 + rng() % std::min<std::size_t>(3, len);
        LinearCode c = span_words(random_matrix(rng, n, m, len));
        HeightPolynomial h = hstar(c);
        CHECK(h.coeff(0) == 1);
        CHECK(h.coefficient_sum() == static_cast<std::int64_t>(c.word_count()));
        CHECK(h.degree() <= c.length() - 1);
    }
}

TEST_CASE("lstar counts full-weight words by height") {
    for (const auto& entry : thin_catalog()) CHECK(lstar(span_words(entry.gen)).is_zero());
    CHECK(lstar(span_words(half_pair(2))).is_zero());
    CHECK(lstar(span_words(half_pair(10))).is_zero());
    CHECK(lstar(twice_triangle()).is_zero());

    CHECK(lstar(LinearCode(2, 2, {{0, 0}, {1, 1}})) == poly({0, 1}));
    for (std::int64_t n = 2; n <= 7; ++n) CHECK(lstar(interval_code(n)) == poly({0, n - 1}));

    // length-7 code over Z4: thin output of the free-join counterexample
    LinearCode seven = span(4, {{0, 1, 2, 2, 2, 2, 3}, {2, 3, 0, 0, 0, 2, 1}});
    CHECK(seven.word_count() == 8);
    CHECK(lstar(seven).is_zero());
    CHECK(hstar(seven) == poly({1, 1, 3, 3}));
    CHECK(weight_enumerator(seven) == poly({1, 0, 1, 0, 3, 0, 3}));
}

TEST_CASE("lstar agrees with inclusion-exclusion over supports and is palindromic") {
    std::mt19937_64 rng(777001);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
        std::size_t len = 2 + rng() % 4;
        std::size_t m = 1 + rng() % std::min<std::size_t>(3, len);
        LinearCode c = span_words(random_matrix(rng, n, m, len));
        HeightPolynomial l = lstar(c);
        CHECK(l == lstar_by_faces(c));
        for (std::size_t k = 0; k <= c.length(); ++k)
            CHECK(l.coeff(k) == l.coeff(c.length() - k));
    }
    for (const auto& entry : thin_catalog()) {
        LinearCode c = span_words(entry.gen);
        CHECK(lstar_by_faces(c) == lstar(c));
    }
}

TEST_CASE("weight_enumerator censuses on fixed codes") {
    CHECK(weight_enumerator(twice_triangle()) == poly({1, 0, 3}));
    auto catalog = thin_catalog();
    CHECK(weight_enumerator(span_words(catalog[2].gen)) == poly({1, 0, 1, 2, 4}));
    CHECK(weight_enumerator(span_words(half_pair(4))) == poly({1, 0, 2, 0, 5}));

    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
        std::size_t len = 2 + rng() % 4;
        LinearCode c = span_words(random_matrix(rng, n, 1 + rng() % 2, len));
        HeightPolynomial w = weight_enumerator(c);
        CHECK(w.coeff(0) == 1);
        CHECK(w.coefficient_sum() == static_cast<std::int64_t>(c.word_count()));
        CHECK(w.degree() <= c.length());
    }
}

TEST_CASE("thinness census and coverage check agree") {
    for (const auto& entry : thin_catalog()) {
        CHECK(is_thin(span_words(entry.gen)));
        CHECK(coverage_is_thin(entry.gen));
    }
    for (std::int64_t n = 2; n <= 6; ++n) {
        CHECK_FALSE(is_thin(interval_code(n)));
        CHECK_FALSE(coverage_is_thin(matrix(n, {{1, n - 1}})));
    }
    std::mt19937_64 rng(99100);
    for (int trial = 0; trial < 80; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
        std::size_t len = 2 + rng() % 5;
        std::size_t m = 1 + rng() % std::min<std::size_t>(3, len);
        GeneratingMatrix g = random_matrix(rng, n, m, len);
        CHECK(is_thin(span_words(g)) == coverage_is_thin(g));
    }
}

TEST_CASE("thinness_prefilter keeps every thin code and its rejections are sound") {
    for (const auto& entry : thin_catalog()) CHECK(thinness_prefilter(entry.gen));
    CHECK(thinness_prefilter(half_pair(4)));
    CHECK(thinness_prefilter(half_pair(10)));

    // zero first column: degenerate thin code over Z7 passes
    GeneratingMatrix pyramid = matrix(7, {{0, 1, 2, 2, 2}});
    CHECK(thinness_prefilter(pyramid));
    CHECK(is_thin(span_words(pyramid)));

    // prime modulus exceeding the support: no zero column forces a rejection
    CHECK_FALSE(thinness_prefilter(matrix(7, {{1, 1, 1, 2, 2}})));
    CHECK_FALSE(thinness_prefilter(matrix(7, {{1, 2, 3, 4, 4}, {2, 2, 2, 3, 5}})));
    CHECK_FALSE(thinness_prefilter(matrix(5, {{1, 1, 1, 2}})));

    // column gcd sum at most the modulus forces a rejection
    CHECK_FALSE(thinness_prefilter(matrix(4, {{1, 1, 2}})));

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 120; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 7);
        std::size_t len = 2 + rng() % 5;
        std::size_t m = 1 + rng() % std::min<std::size_t>(3, len);
        GeneratingMatrix g = random_matrix(rng, n, m, len);
        if (!thinness_prefilter(g)) CHECK_FALSE(is_thin(span_words(g)));
    }
}

TEST_CASE("is_degenerate detects an identically zero coordinate") {
    CHECK(is_degenerate(span(7, {{0, 1, 2, 2, 2}})));
    CHECK(is_degenerate(span(2, {{0, 1, 1}})));
    CHECK_FALSE(is_degenerate(twice_triangle()));
    for (const auto& entry : thin_catalog()) CHECK_FALSE(is_degenerate(span_words(entry.gen)));
}

TEST_CASE("primitivize divides out the common content") {
    GeneratingMatrix doubled = matrix(4, {{2, 2, 0}, {0, 2, 2}});
    GeneratingMatrix prim = primitivize(doubled);
    CHECK(prim.modulus() == 2);
    CHECK(prim.rows() == std::vector<Word>{{1, 1, 0}, {0, 1, 1}});

    GeneratingMatrix tripled = matrix(6, {{2, 4}});
    CHECK(primitivize(tripled).modulus() == 3);
    CHECK(primitivize(tripled).row(0) == Word{1, 2});

    GeneratingMatrix already = thin_catalog()[1].gen;
    CHECK(primitivize(already) == already);

    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 7);
        std::size_t len = 2 + rng() % 4;
        GeneratingMatrix g = random_matrix(rng, n, 1 + rng() % 2, len);
        LinearCode direct = primitivize(span_words(g));
        CHECK(direct == span_words(primitivize(g)));
        CHECK(hstar(direct) == hstar(span_words(g)));
    }
}

TEST_CASE("find_direct_sum locates a splitting bipartition") {
    LinearCode splittable = span(6, {{3, 3, 0, 0, 0}, {3, 0, 3, 0, 0}, {0, 0, 0, 1, 5}});
    auto split = find_direct_sum(splittable);
    REQUIRE(split.has_value());
    CHECK(split->part_one == std::vector<std::size_t>{0, 1, 2});
    CHECK(split->part_two == std::vector<std::size_t>{3, 4});
    CHECK(split->factor_one == twice_triangle());
    CHECK(split->factor_two == interval_code(6));
    CHECK(direct_sum(split->factor_one, split->factor_two) == splittable);

    CHECK_FALSE(find_direct_sum(span_words(half_pair(6))).has_value());
    CHECK_FALSE(find_direct_sum(twice_triangle()).has_value());
    for (const auto& entry : thin_catalog())
        CHECK_FALSE(find_direct_sum(span_words(entry.gen)).has_value());

    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 25; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 4);
        LinearCode a = primitivize(span_words(random_matrix(rng, n, 1, 2 + rng() % 2)));
        LinearCode b = primitivize(span_words(random_matrix(rng, n, 1, 2 + rng() % 2)));
        if (a.modulus() == 1 || b.modulus() == 1) continue;
        LinearCode sum = direct_sum(a, b);
        auto found = find_direct_sum(sum);
        REQUIRE(found.has_value());
        CHECK(found->factor_one.word_count() * found->factor_two.word_count() == sum.word_count());
    }
}

TEST_CASE("direct_sum concatenates with scaling and multiplies censuses") {
    LinearCode sum = direct_sum(twice_triangle(), interval_code(3));
    CHECK(sum.modulus() == 6);
    CHECK(sum.length() == 5);
    CHECK(sum.word_count() == 12);
    CHECK(hstar(sum) == poly({1, 5, 6}));
    CHECK(hstar(sum) == hstar(twice_triangle()) * hstar(interval_code(3)));
    CHECK(weight_enumerator(sum) ==
          weight_enumerator(twice_triangle()) * weight_enumerator(interval_code(3)));
    CHECK(lstar(sum) == lstar(twice_triangle()) * lstar(interval_code(3)));

    CHECK_THROWS_AS(direct_sum(span(4, {{2, 2, 0}}), interval_code(3)), std::invalid_argument);

    std::mt19937_64 rng(717171);
    for (int trial = 0; trial < 25; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
        LinearCode a = primitivize(span_words(random_matrix(rng, n, 1, 2 + rng() % 3)));
        LinearCode b = primitivize(span_words(random_matrix(rng, 2 + static_cast<std::int64_t>(rng() % 5), 1, 2 + rng() % 3)));
        if (a.modulus() == 1 || b.modulus() == 1) continue;
        LinearCode s = direct_sum(a, b);
        CHECK(s.word_count() == a.word_count() * b.word_count());
        CHECK(hstar(s) == hstar(a) * hstar(b));
        CHECK(lstar(s) == lstar(a) * lstar(b));
        CHECK(weight_enumerator(s) == weight_enumerator(a) * weight_enumerator(b));
        CHECK(is_thin(s) == (is_thin(a) || is_thin(b)));
    }
}

TEST_CASE("cayley_partition finds a maximum zero-sum partition") {
    auto max_parts = [](const GeneratingMatrix& g) {
        std::vector<std::vector<std::vector<std::size_t>>> parts;
        std::vector<std::vector<std::size_t>> cur;
        all_partitions(g.length(), 0, cur, parts);
        std::size_t best = 0;
        for (const auto& cand : parts)
            if (blocks_zero_sum(g, cand)) best = std::max(best, cand.size());
        return best;
    };

    auto tri = cayley_partition(matrix(2, {{1, 1, 0}, {0, 1, 1}}));
    CHECK(tri == std::vector<std::vector<std::size_t>>{{0, 1, 2}});

    // maximum partitions need not be unique; require validity and exact size
    for (std::int64_t n : {2, 6, 10}) {
        auto fam = cayley_partition(half_pair(n));
        CHECK(blocks_zero_sum(half_pair(n), fam));
        CHECK(fam.size() == 2);
        CHECK(max_parts(half_pair(n)) == 2);
    }

    GeneratingMatrix two = matrix(3, {{0, 0, 1, 1, 1}, {1, 2, 0, 1, 2}});
    auto two_parts = cayley_partition(two);
    CHECK(blocks_zero_sum(two, two_parts));
    CHECK(two_parts.size() == max_parts(two));
    CHECK(two_parts.size() == 2);

    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 60; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
        std::size_t len = 2 + rng() % 4;  // up to 5 columns
        std::size_t m = 1 + rng() % 2;
        GeneratingMatrix g = random_matrix(rng, n, m, len);
        auto best = cayley_partition(g);
        CHECK(blocks_zero_sum(g, best));
        std::size_t covered = 0;
        for (const auto& p : best) covered += p.size();
        CHECK(covered == g.length());

        std::vector<std::vector<std::vector<std::size_t>>> parts;
        std::vector<std::vector<std::size_t>> cur;
        all_partitions(g.length(), 0, cur, parts);
        std::size_t brute = 0;
        for (const auto& cand : parts)
            if (blocks_zero_sum(g, cand)) brute = std::max(brute, cand.size());
        CHECK(best.size() == brute);
    }

    std::vector<Word> wide(1, Word(17, 0));
    CHECK_THROWS_AS(cayley_partition(matrix(2, std::move(wide))), std::invalid_argument);
}

TEST_CASE("is_spanning tests generation by height-one words") {
    auto catalog = thin_catalog();
    CHECK(is_spanning(span_words(catalog[0].gen)));
    CHECK_FALSE(is_spanning(span_words(catalog[1].gen)));
    CHECK(is_spanning(span_words(catalog[4].gen)));
    CHECK(is_spanning(span(6, {{3, 3, 0, 0, 0}, {3, 0, 3, 2, 4}})));
    CHECK_FALSE(is_spanning(span_words(half_pair(2))));
    CHECK_FALSE(is_spanning(span_words(half_pair(6))));
    CHECK(is_spanning(twice_triangle()));
}

TEST_CASE("canonical_form is a column-permutation invariant") {
    // two nonzero offset choices of the same construction over Z6
    LinearCode variant_a = span(6, {{3, 0, 3, 1, 5}, {3, 3, 0, 1, 5}});
    LinearCode variant_b = span(6, {{3, 0, 3, 0, 0}, {3, 3, 0, 1, 5}});
    CHECK(canonical_form(variant_a) == canonical_form(variant_b));
    CHECK(canonical_form(variant_a) == canonical_form(span_words(half_pair(6))));

    for (const auto& entry : thin_catalog()) {
        LinearCode c = span_words(entry.gen);
        LinearCode canon = canonical_form(c);
        CHECK(canon.word_count() == c.word_count());
        CHECK(canonical_form(canon) == canon);
        std::vector<std::size_t> reversal(c.length());
        for (std::size_t i = 0; i < c.length(); ++i) reversal[i] = c.length() - 1 - i;
        CHECK(canonical_form(permuted(c, reversal)) == canon);
    }

    std::mt19937_64 rng(112358);
    for (int trial = 0; trial < 30; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
        std::size_t len = 2 + rng() % 5;  // up to 6 columns
        LinearCode c = span_words(random_matrix(rng, n, 1 + rng() % 2, len));
        std::vector<std::size_t> perm(len);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted(c, perm)) == canonical_form(c));
    }

    std::vector<Word> wide(1, Word(11, 0));
    CHECK_THROWS_AS(canonical_form(span(2, std::move(wide))), std::invalid_argument);
}

TEST_CASE("invariant_fingerprint separates codes the cheap statistics can") {
    Fingerprint tri = invariant_fingerprint(twice_triangle());
    CHECK(tri.modulus == 2);
    CHECK(tri.length == 3);
    CHECK(tri.word_count == 4);
    CHECK(tri.hstar == poly({1, 3}));
    CHECK(tri.weight_enum == poly({1, 0, 3}));

    // same modulus, length, size, and hstar, separated only by weights
    LinearCode a = span_words(thin_catalog()[2].gen);
    LinearCode b = span_words(half_pair(4));
    CHECK(hstar(a) == hstar(b));
    CHECK(a.word_count() == b.word_count());
    CHECK(invariant_fingerprint(a) != invariant_fingerprint(b));
    CHECK(canonical_form(a) != canonical_form(b));

    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 30; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 6);
        std::size_t len = 2 + rng() % 5;
        LinearCode c = span_words(random_matrix(rng, n, 1 + rng() % 2, len));
        std::vector<std::size_t> perm(len);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(invariant_fingerprint(permuted(c, perm)) == invariant_fingerprint(c));
    }
}

TEST_CASE("generators_of spans the code it came from") {
    for (const auto& entry : thin_catalog()) {
        LinearCode c = span_words(entry.gen);
        GeneratingMatrix g = generators_of(c);
        CHECK(g.modulus() == c.modulus());
        CHECK(span_words(g) == c);
    }
    LinearCode zero(4, 3, {{0, 0, 0}});
    GeneratingMatrix zg = generators_of(zero);
    CHECK(zg.row_count() == 1);
    CHECK(zg.row(0) == Word{0, 0, 0});
    CHECK(span_words(zg) == zero);

    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 50; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 7);
        std::size_t len = 2 + rng() % 5;
        std::size_t m = 1 + rng() % std::min<std::size_t>(3, len);
        LinearCode c = span_words(random_matrix(rng, n, m, len));
        GeneratingMatrix g = generators_of(c);
        CHECK(span_words(g) == c);
        std::size_t log2_bound = 0;
        while ((std::size_t{1} << (log2_bound + 1)) <= c.word_count()) ++log2_bound;
        CHECK(g.row_count() <= std::max<std::size_t>(1, log2_bound));
    }
}

TEST_CASE("coordinate hyperplane counts follow the column gcd") {
    std::mt19937_64 rng(141421);
    for (int trial = 0; trial < 40; ++trial) {
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 7);
        std::size_t len = 2 + rng() % 4;
        std::size_t m = 1 + rng() % std::min<std::size_t>(3, len);
        GeneratingMatrix g = random_matrix(rng, n, m, len);

        std::int64_t tuples = 1;
        for (std::size_t i = 0; i < m; ++i) tuples *= n;
        for (std::size_t col = 0; col < len; ++col) {
            std::int64_t hits = 0;
            for (std::int64_t a = 0; a < tuples; ++a) {
                std::int64_t rest = a, dot = 0;
                for (std::size_t r = 0; r < m; ++r) {
                    dot += (rest % n) * g.row(r)[col];
                    rest /= n;
                }
                if (dot % n == 0) ++hits;
            }
            Word column = g.column(col);
            std::int64_t expected = content_gcd(column, n) * (tuples / n);
            CHECK(hits == expected);
        }
    }
}

TEST_CASE("HeightPolynomial arithmetic and printing") {
    CHECK(HeightPolynomial{}.is_zero());
    CHECK(poly({}) == HeightPolynomial{});
    CHECK(poly({1, 3, 0}).degree() == 1);  // trailing zeros trimmed
    CHECK(poly({1, 3}).coeff(5) == 0);
    CHECK(poly({1, 3}).coefficient_sum() == 4);
    CHECK_THROWS_AS(poly({1, -2}), std::invalid_argument);

    CHECK(poly({1, 3}) * poly({1, 2}) == poly({1, 5, 6}));
    CHECK(poly({1, 1}) * poly({1, 0, 3}) == poly({1, 1, 3, 3}));
    CHECK((HeightPolynomial{} * poly({1, 2})).is_zero());

    CHECK(poly({1, 3, 2}).to_string() == "1 + 3t + 2t^2");
    CHECK(poly({1, 0, 3}).to_string('X') == "1 + 3X^2");
    CHECK(poly({0, 1}).to_string() == "t");
    CHECK(HeightPolynomial{}.to_string() == "0");
}
