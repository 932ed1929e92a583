#include "scrollfano/numeric.hpp"

namespace scrollfano {

namespace {

constexpr std::int64_t kTriangleLimit = 512;

const Int& triangle_entry(std::int64_t n, std::int64_t k) {
    thread_local std::vector<std::vector<Int>> rows;
    if (static_cast<std::int64_t>(rows.size()) <= n) {
        rows.reserve(static_cast<std::size_t>(n) + 1);
        while (static_cast<std::int64_t>(rows.size()) <= n) {
            const std::size_t r = rows.size();
            std::vector<Int> row(r + 1, 1);
            for (std::size_t j = 1; j < r; ++j)
                row[j] = rows[r - 1][j - 1] + rows[r - 1][j];
            rows.push_back(std::move(row));
        }
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

Int binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (k == 0) return 1;
    if (n <= kTriangleLimit) return triangle_entry(n, k);
    Int result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Int simplex_points(std::int64_t bound, int s) {
    if (bound < 0) return 0;
    return binomial(bound + s, s);
}

}  // namespace scrollfano
