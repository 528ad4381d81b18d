#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "thincode/code.hpp"

namespace thincode::testing {

inline GeneratingMatrix matrix(std::int64_t modulus, std::vector<Word> rows) {
    return GeneratingMatrix(modulus, std::move(rows));
}

inline LinearCode span(std::int64_t modulus, std::vector<Word> rows) {
    return span_words(GeneratingMatrix(modulus, std::move(rows)));
}

// twice the standard triangle: N=2, rows (1,1,0),(0,1,1)
inline LinearCode twice_triangle() { return span(2, {{1, 1, 0}, {0, 1, 1}}); }

// code of the interval [0,k]: N=k, single row (1, k-1)
inline LinearCode interval_code(std::int64_t k) {
    if (k == 1) return span(1, {{0, 0}});
    return span(k, {{1, k - 1}});
}

// Random extended generating matrix: m rows of length n over Z_N, the last
// entry of each row fixed so the row sums to zero.
inline GeneratingMatrix random_matrix(std::mt19937_64& rng, std::int64_t modulus,
                                      std::size_t rows, std::size_t length) {
    std::vector<Word> r(rows, Word(length, 0));
    for (auto& row : r) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < length; ++i) {
            row[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(modulus));
            sum += row[i];
        }
        row[length - 1] = (modulus - sum % modulus) % modulus;
    }
    return GeneratingMatrix(modulus, std::move(r));
}

}  // namespace thincode::testing
