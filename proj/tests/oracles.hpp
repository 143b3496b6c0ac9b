#pragma once

// Slow reference computations used only by the tests. None of them call into
// the library routines they are compared against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Gaussian elimination on a copy, column by column, over F_q.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t q)
{
    auto pw = [q](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= q;
        while (e > 0) {
            if (e & 1)
                r = r * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return r;
    };
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && ((a[piv][c] % q) + q) % q == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        const std::int64_t inv = pw(((a[r][c] % q) + q) % q, q - 2);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            const std::int64_t f = ((a[i][c] % q) + q) % q * inv % q;
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = ((a[i][j] - f * a[r][j]) % q + q) % q;
        }
        ++r;
    }
    return r;
}

// Basis of {x : a x = 0} over F_q, by reduced row echelon form.
inline std::vector<std::vector<std::int64_t>> nullspace_mod(std::vector<std::vector<std::int64_t>> a, std::size_t cols,
                                                            std::int64_t q)
{
    auto inv = [q](std::int64_t b) {
        std::int64_t r = 1, e = q - 2;
        b %= q;
        while (e > 0) {
            if (e & 1)
                r = r * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return r;
    };
    for (auto& row : a)
        for (auto& x : row)
            x = ((x % q) + q) % q;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[r]);
        const std::int64_t s = inv(a[r][c]);
        for (auto& x : a[r])
            x = x * s % q;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c] != 0) {
                const std::int64_t f = a[i][c];
                for (std::size_t j = 0; j < cols; ++j)
                    a[i][j] = ((a[i][j] - f * a[r][j]) % q + q) % q;
            }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
            continue;
        std::vector<std::int64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = (q - a[i][free]) % q;
        out.push_back(std::move(v));
    }
    return out;
}

// Sign of the permutation sorting the concatenation of S then T (as sorted
// index lists), by counting bubble-sort swaps. Zero when they overlap.
inline int shuffle_sign(std::uint32_t s, std::uint32_t t)
{
    if (s & t)
        return 0;
    std::vector<int> seq;
    for (int i = 0; i < 32; ++i)
        if (s >> i & 1)
            seq.push_back(i);
    for (int i = 0; i < 32; ++i)
        if (t >> i & 1)
            seq.push_back(i);
    int swaps = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j + 1 < seq.size() - i; ++j)
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                ++swaps;
            }
    return swaps % 2 ? -1 : 1;
}

// Number of semistandard Young tableaux of the given shape with entries in
// {1, ..., n}: rows weakly increase, columns strictly increase.
inline std::uint64_t ssyt_count(const std::vector<int>& shape, int n)
{
    std::vector<std::vector<int>> t;
    for (int len : shape)
        t.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            cells.emplace_back(static_cast<int>(r), c);
    std::uint64_t count = 0;
    auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        for (int x = lo; x <= n; ++x) {
            t[r][c] = x;
            self(self, k + 1);
        }
    };
    fill(fill, 0);
    return count;
}

inline std::uint64_t choose(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// dim H^j(P^m, O(k)) from the explicit description: sections are degree-k
// monomials, the top cohomology is dual to degree (-k-m-1) monomials.
inline std::uint64_t projective_cohomology(int m, int j, int k)
{
    if (m == 0)
        return j == 0 ? 1 : 0;
    if (j == 0)
        return k >= 0 ? choose(m + k, m) : 0;
    if (j == m)
        return k <= -m - 1 ? choose(-k - 1, m) : 0;
    return 0;
}

inline std::uint64_t sym_dim(int n, int k)
{
    return k < 0 ? 0 : choose(n + k - 1, k);
}

} // namespace oracle
