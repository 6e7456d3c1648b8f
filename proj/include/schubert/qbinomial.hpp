#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "count.hpp"

namespace schubert {

/// Coefficient list of the Gaussian binomial [a+b choose b]_q, degree a*b.
/// Computed by the q-Pascal recurrence
///     [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q,
/// which never touches subdiagram counting and so serves as an independent
/// route to the Betti numbers of a rectangle.
inline std::vector<Count> gaussian_binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
    const auto n_max = static_cast<std::size_t>(a + b);
    const auto k_max = static_cast<std::size_t>(b);
    // row[k] holds [n k]_q for the current n; absent entries are zero.
    std::vector<std::vector<Count>> row(k_max + 1);
    row[0] = {Count(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = std::min(n, k_max); k >= 1; --k) {
            std::vector<Count> next = row[k - 1];
            if (!row[k].empty()) {
                // add q^k * row[k]
                if (next.size() < row[k].size() + k) next.resize(row[k].size() + k);
                for (std::size_t d = 0; d < row[k].size(); ++d)
                    next[d + k] += row[k][d];
            }
            row[k] = std::move(next);
        }
    }
    if (row[k_max].size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b) + 1)
        throw std::logic_error("gaussian_binomial: degree mismatch");
    return row[k_max];
}

} // namespace schubert
