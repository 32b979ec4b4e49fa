#pragma once

// Test-only oracles that never touch the library's multiplication or
// enumeration paths.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

/// D_{2n} realized as permutations of the vertices 0..n-1 of an n-gon:
/// a = rotation v -> v + 1, b = reflection v -> -v. Element a^i b^j is the
/// composite "first b^j, then a^i".
struct PermDihedral {
    std::size_t n;

    std::vector<std::size_t> perm(std::size_t i, std::size_t j) const {
        std::vector<std::size_t> out(n);
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t after_b = j ? (n - v) % n : v;
            out[v] = (after_b + i) % n;
        }
        return out;
    }

    /// Canonical index of the product x * y (apply y first, then x).
    std::size_t product(std::size_t x, std::size_t y) const {
        const auto px = perm(x % n, x / n);
        const auto py = perm(y % n, y / n);
        std::vector<std::size_t> comp(n);
        for (std::size_t v = 0; v < n; ++v) comp[v] = px[py[v]];
        for (std::size_t idx = 0; idx < 2 * n; ++idx) {
            if (perm(idx % n, idx / n) == comp) return idx;
        }
        return SIZE_MAX;
    }
};

/// Naive group algebra product over a multiplication table.
inline std::vector<std::uint32_t> convolve(const std::vector<std::vector<std::size_t>>& table,
                                           const std::vector<std::uint32_t>& x,
                                           const std::vector<std::uint32_t>& y, std::uint32_t q) {
    std::vector<std::uint32_t> z(x.size(), 0);
    for (std::size_t g = 0; g < x.size(); ++g)
        for (std::size_t h = 0; h < y.size(); ++h)
            z[table[g][h]] = static_cast<std::uint32_t>((z[table[g][h]] + std::uint64_t(x[g]) * y[h]) % q);
    return z;
}

inline std::vector<std::vector<std::size_t>> dihedral_table(std::size_t n) {
    const PermDihedral d{n};
    std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
    for (std::size_t x = 0; x < 2 * n; ++x)
        for (std::size_t y = 0; y < 2 * n; ++y) t[x][y] = d.product(x, y);
    return t;
}

/// Weight histogram of every linear combination of `gens` (q^|gens| words,
/// duplicates included when gens are dependent).
inline std::vector<std::uint64_t> span_histogram(const std::vector<std::vector<std::uint32_t>>& gens, std::uint32_t q) {
    const std::size_t n = gens.front().size();
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<std::uint32_t> msg(gens.size(), 0);
    while (true) {
        std::size_t w = 0;
        for (std::size_t c = 0; c < n; ++c) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) s += std::uint64_t(msg[i]) * gens[i][c];
            if (s % q) ++w;
        }
        ++hist[w];
        std::size_t pos = 0;
        while (pos < msg.size() && ++msg[pos] == q) msg[pos++] = 0;
        if (pos == msg.size()) break;
    }
    return hist;
}

}  // namespace oracle
