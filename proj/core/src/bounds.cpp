#include "thincode/bounds.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "thincode/intlin.hpp"

namespace thincode {

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t j = 1; j <= k; ++j) result = result * (n - k + j) / j;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> low, high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

}  // namespace

std::int64_t coprime_compositions(std::int64_t m, std::int64_t i,
                                  CompositionConvention convention) {
    if (m < 2) throw std::invalid_argument("tuple length must be >= 2");
    if (i < 1) throw std::invalid_argument("sum must be >= 1");
    if (i == 1 && convention == CompositionConvention::TotientLike) return 1;
    std::int64_t total = 0;
    for (std::int64_t k : divisors(i)) {
        const int mu = mobius(k);
        if (mu != 0) total += mu * binom(i / k + m - 1, m - 1);
    }
    return total;
}

StepCount s_z(std::int64_t m, std::int64_t n, CompositionConvention convention) {
    if (m < 2 || n < 2) throw std::invalid_argument("s_z needs m >= 2 and n >= 2");
    std::vector<std::int64_t> counts;  // counts[i-1] = c_i(m)
    auto level = [&](std::int64_t i) {
        while (static_cast<std::int64_t>(counts.size()) < i)
            counts.push_back(coprime_compositions(
                m, static_cast<std::int64_t>(counts.size()) + 1, convention));
        return counts[static_cast<std::size_t>(i) - 1];
    };

    std::int64_t k = 0, consumed = 0;  // consumed = sum of c_i over i <= k
    while (consumed + level(k + 1) <= n + 1) consumed += level(++k);
    std::int64_t s = 0;
    for (std::int64_t i = 1; i <= k; ++i) s += i * level(i);
    s += (n + 1 - consumed) * (k + 1);
    return {k, s};
}

BoundTable n_m_bound(std::int64_t m, CompositionConvention convention) {
    if (m < 2 || m > 7) throw std::invalid_argument("m must be between 2 and 7");
    std::int64_t best = -1;
    for (std::int64_t n = 2;; ++n) {
        const StepCount sc = s_z(m, n, convention);
        if (sc.s <= m * n)
            best = n;
        else if (sc.k >= m)
            break;  // growth k+1 > m from here on, the gap only widens
        if (n > 2'000'000) throw std::logic_error("threshold scan failed to terminate");
    }
    if (best < 0) throw std::runtime_error("no threshold exists under this convention");
    return {m, best, closest_prime_at_most(best), convention};
}

CompositionConvention resolve_convention() {
    static constexpr std::array<std::int64_t, 6> reference{2, 17, 83, 379, 1499, 5987};
    auto reproduces = [&](CompositionConvention convention) {
        for (std::int64_t m = 2; m <= 7; ++m) {
            try {
                if (n_m_bound(m, convention).threshold_prime != reference[m - 2]) return false;
            } catch (const std::runtime_error&) {
                return false;
            }
        }
        return true;
    };
    const bool tuple = reproduces(CompositionConvention::TupleCount);
    const bool totient = reproduces(CompositionConvention::TotientLike);
    if (tuple == totient)
        throw std::logic_error("threshold table does not single out a convention");
    return tuple ? CompositionConvention::TupleCount : CompositionConvention::TotientLike;
}

}  // namespace thincode
