#include "qgx/combinatorics.hpp"

#include <limits>
#include <vector>

#include "qgx/errors.hpp"

namespace qgx {

std::uint64_t factorial(std::size_t n) noexcept {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
        f *= i;
    }
    return f;
}

Permutation nth_permutation(std::size_t n, std::uint64_t rank) {
    if (n > 20 || rank >= factorial(n)) throw ParameterError("permutation rank out of range");
    std::vector<int> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i + 1);
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t left = n; left > 0; --left) {
        const auto block = factorial(left - 1);
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
        std::swap(v[i - 1], v[j]);
    }
    return Permutation(std::move(v));
}

} // namespace qgx
