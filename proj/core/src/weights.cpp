#include "tate/weights.hpp"

#include <algorithm>

namespace tate::wt {

namespace {

using Wide = unsigned __int128;

constexpr Wide kCountLimit = static_cast<Wide>(~Count{0});

Count checked(Wide x)
{
    if (x > kCountLimit)
        throw std::overflow_error("dimension exceeds 64 bits");
    return static_cast<Count>(x);
}

std::string sym(int k, const char* space)
{
    return "S^" + std::to_string(k) + " " + space;
}

} // namespace

bool Weight::is_dominant() const
{
    return std::is_sorted(coords.rbegin(), coords.rend());
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be non-negative");
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

std::size_t Partition::length() const
{
    return parts_.size();
}

std::vector<int> Partition::padded(std::size_t len) const
{
    if (parts_.size() > len)
        throw std::invalid_argument("partition has more than " + std::to_string(len) + " nonzero parts");
    std::vector<int> out = parts_;
    out.resize(len, 0);
    return out;
}

std::optional<BbwResult> bbw(const Weight& lambda)
{
    const std::size_t n = lambda.n();
    std::vector<long long> shifted(n);
    for (std::size_t i = 0; i < n; ++i)
        shifted[i] = static_cast<long long>(lambda.coords[i]) + static_cast<long long>(n - 1 - i);

    // Length of the sorting permutation = pairs out of decreasing order.
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (shifted[i] == shifted[j])
                return std::nullopt;
            if (shifted[i] < shifted[j])
                ++inversions;
        }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    Weight mu;
    mu.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        mu.coords[i] = static_cast<int>(shifted[i] - static_cast<long long>(n - 1 - i));
    const Count dim = weyl_dim(mu);
    return BbwResult{inversions, std::move(mu), dim};
}

Count weyl_dim(const Weight& mu)
{
    if (!mu.is_dominant())
        throw NonDominant("weyl_dim needs a weakly decreasing weight");
    const std::size_t n = mu.n();
    Wide num = 1;
    Wide den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Wide a = static_cast<Wide>(static_cast<long long>(mu.coords[i]) - mu.coords[j] + static_cast<long long>(j - i));
            Wide b = j - i;
            // Cancel before multiplying to keep intermediates small.
            auto gcd128 = [](Wide x, Wide y) {
                while (y != 0) {
                    Wide t = x % y;
                    x = y;
                    y = t;
                }
                return x;
            };
            Wide g1 = gcd128(a, den);
            a /= g1;
            den /= g1;
            Wide g2 = gcd128(num, b);
            num /= g2;
            b /= g2;
            if (a != 0 && num > (~Wide{0}) / a)
                throw std::overflow_error("weyl_dim overflow");
            num *= a;
            den *= b;
            Wide g3 = gcd128(num, den);
            num /= g3;
            den /= g3;
        }
    if (den != 1)
        throw std::logic_error("weyl_dim: non-integral result");
    return checked(num);
}

Count binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Wide r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
    return checked(r);
}

Count sym_power_dim(int n, int k)
{
    if (k < 0 || n <= 0)
        return k == 0 ? 1 : 0;
    return binomial(n + k - 1, k);
}

namespace {

std::optional<TermPrediction> nonzero(TermPrediction t)
{
    if (t.rank == 0)
        return std::nullopt;
    return t;
}

std::optional<TermPrediction> predict_bilinear(int dim_a, int dim_b, int p, const char* name_b)
{
    if (dim_a < 1 || dim_b < 1)
        throw std::invalid_argument("dimensions must be positive");
    const int a = dim_a - 1;
    const int b = dim_b - 1;
    if (p == 0)
        return nonzero({p, a, static_cast<Count>(dim_a), "A^*"});
    if (p == 1)
        return nonzero({p, a - 1, static_cast<Count>(dim_b), name_b});
    if (p >= 2) {
        const Count rank = sym_power_dim(dim_a, p - 2) * sym_power_dim(dim_b, p + a);
        return nonzero({p, -p, rank, sym(p - 2, "A") + " ⊗ " + sym(p + a, name_b) + " ⊗ Λ^" + std::to_string(a + 1) + " A"});
    }
    const int r = -p;
    const Count rank = sym_power_dim(dim_a, b + r - 1) * sym_power_dim(dim_b, r - 1);
    return nonzero({p, a + b + r, rank,
                    sym(b + r - 1, "A^*") + " ⊗ " + sym(r - 1, (std::string(name_b) + "^*").c_str()) + " ⊗ Λ^" +
                        std::to_string(b + 1) + " " + name_b + "^*"});
}

// dim S_{(x, y, 0, ...)} of an n-dimensional space.
Count two_row_dim(int n, int x, int y)
{
    if (y < 0 || x < y)
        return 0;
    Weight mu;
    mu.coords.assign(n, 0);
    mu.coords[0] = x;
    if (n > 1)
        mu.coords[1] = y;
    else if (y > 0)
        return 0;
    return weyl_dim(mu);
}

// dim H^j(P^m, O(k)), through bbw on the GL_{m+1} weight (k, 0, ..., 0).
Count projective_space_cohomology(int m, int j, int k)
{
    Weight lambda;
    lambda.coords.assign(m + 1, 0);
    lambda.coords[0] = k;
    auto res = bbw(lambda);
    return (res && res->length == j) ? res->dim : 0;
}

} // namespace

std::optional<TermPrediction> predict_general(int dim_a, int dim_b, int p)
{
    return predict_bilinear(dim_a, dim_b, p, "B");
}

std::optional<TermPrediction> predict_symmetric(int dim_a, int p)
{
    return predict_bilinear(dim_a, dim_a, p, "A");
}

std::optional<TermPrediction> predict_skew(int dim_a, int p)
{
    if (dim_a < 2)
        throw std::invalid_argument("skew predictions need dimA >= 2");
    const int a = dim_a - 1;
    if (p == 0)
        return nonzero({p, a - 1, static_cast<Count>(dim_a), "A^*"});
    if (p == 1)
        return nonzero({p, a - 2, static_cast<Count>(dim_a), "A"});
    if (p >= 2)
        return nonzero({p, -p, two_row_dim(dim_a, a + p - 2, p - 2),
                        "S_{" + std::to_string(a + p - 2) + "," + std::to_string(p - 2) + "} A ⊗ Λ^" +
                            std::to_string(a + 1) + " A"});
    const int r = -p;
    return nonzero({p, 2 * a + r - 2, two_row_dim(dim_a, a + r - 1, r - 1),
                    "S_{" + std::to_string(a + r - 1) + "," + std::to_string(r - 1) + "} A^* ⊗ Λ^" +
                        std::to_string(a + 1) + " A^*"});
}

std::vector<TermPrediction> segre_bundle_terms(int dim_a, int dim_b, int p)
{
    const int a = dim_a - 1;
    const int b = dim_b - 1;
    std::vector<TermPrediction> out;
    for (int i = 0; i <= a + b; ++i) {
        // L(p - i) = O(p - i - 2, p - i + a).
        const int ka = p - i - 2;
        const int kb = p - i + a;
        Count total = 0;
        for (int j = 0; j <= std::min(i, a); ++j)
            if (i - j <= b)
                total += projective_space_cohomology(a, j, ka) * projective_space_cohomology(b, i - j, kb);
        if (total > 0)
            out.push_back({p, i - p, total, "H^" + std::to_string(i) + " L(" + std::to_string(p - i) + ")"});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.omega_twist < y.omega_twist; });
    return out;
}

std::vector<TermPrediction> grassmannian_bundle_terms(int dim_a, int p)
{
    if (dim_a < 2)
        throw std::invalid_argument("Grassmannian terms need dimA >= 2");
    const int a = dim_a - 1;
    std::vector<TermPrediction> out;
    for (int i = 0; i <= 2 * (a - 1); ++i) {
        const int t = p - i;
        // L(t) is induced from (a-1+t) eps_0 + (t-1) eps_1 + eps_2 + ... + eps_a.
        Weight lambda;
        lambda.coords.assign(dim_a, 1);
        lambda.coords[0] = a - 1 + t;
        lambda.coords[1] = t - 1;
        auto res = bbw(lambda);
        if (res && res->length == i)
            out.push_back({p, i - p, res->dim, "H^" + std::to_string(i) + " L(" + std::to_string(t) + ")"});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.omega_twist < y.omega_twist; });
    return out;
}

SchurTerm schur_terms(const Partition& part, int v, int p)
{
    if (v < 0)
        throw std::invalid_argument("v must be non-negative");
    const std::vector<int> parts = part.padded(static_cast<std::size_t>(v));
    int h = 0;
    while (h < v && parts[h] > p)
        ++h;
    Weight twisted;
    for (int j = 0; j < h; ++j)
        twisted.coords.push_back(parts[j] - 1);
    twisted.coords.push_back(p);
    for (int j = h; j < v; ++j)
        twisted.coords.push_back(parts[j]);
    const Count rank = weyl_dim(twisted);
    return {h, std::move(twisted), h - p, rank};
}

CohomologyTable cohomology_table(const Partition& part, int v, int p_min, int p_max)
{
    const std::vector<int> parts = part.padded(static_cast<std::size_t>(v));
    CohomologyTable table;
    table.v = v;
    table.p_min = p_min;
    table.p_max = p_max;
    table.values.assign(v + 1, std::vector<Count>(std::max(0, p_max - p_min + 1), 0));
    for (int p = p_min; p <= p_max; ++p)
        for (int r = 0; r <= v; ++r) {
            Weight lambda;
            lambda.coords.push_back(p - r);
            lambda.coords.insert(lambda.coords.end(), parts.begin(), parts.end());
            auto res = bbw(lambda);
            if (res && res->length == r)
                table.values[r][p - p_min] = res->dim;
        }
    return table;
}

} // namespace tate::wt
