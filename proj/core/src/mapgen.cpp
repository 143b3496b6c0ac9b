#include "tate/mapgen.hpp"

#include <random>
#include <vector>

namespace tate::maps {

using ext::ExtElement;
using ext::FreeGradedModule;
using ext::Monomial;

std::string to_string(MapKind kind)
{
    switch (kind) {
    case MapKind::general:
        return "general";
    case MapKind::symmetric:
        return "symmetric";
    case MapKind::skew:
        return "skew";
    case MapKind::koszul:
        return "koszul";
    case MapKind::symplectic:
        return "symplectic";
    }
    return "unknown";
}

MapKind parse_map_kind(const std::string& name)
{
    for (auto k : {MapKind::general, MapKind::symmetric, MapKind::skew, MapKind::koszul, MapKind::symplectic})
        if (to_string(k) == name)
            return k;
    throw std::invalid_argument("unknown map kind '" + name + "'");
}

namespace {

void require_positive(int value, const char* name)
{
    if (value < 1)
        throw DimensionGuard(std::string(name) + " must be at least 1");
}

// Element sigma(column c) of V.
ExtElement form_of_column(const Matrix& sigma, std::size_t c, int dim_w)
{
    std::vector<la::Scalar> coords(dim_w);
    for (int k = 0; k < dim_w; ++k)
        coords[k] = sigma(k, c);
    return ExtElement::linear_form(dim_w, sigma.field(), coords);
}

} // namespace

void check_guards(const MapSpec& spec)
{
    const int a = spec.dim_a - 1;
    const int b = spec.dim_b - 1;
    const int v = spec.dim_w - 1;
    require_positive(spec.dim_w, "dimW");
    switch (spec.kind) {
    case MapKind::general:
        require_positive(spec.dim_a, "dimA");
        require_positive(spec.dim_b, "dimB");
        if (!spec.force && v < a + b)
            throw DimensionGuard("general map needs v >= a + b (v = " + std::to_string(v) + ", a = " + std::to_string(a) +
                                 ", b = " + std::to_string(b) + ")");
        break;
    case MapKind::symmetric:
        require_positive(spec.dim_a, "dimA");
        if (!spec.force && v < 2 * a)
            throw DimensionGuard("symmetric map needs v >= 2a (v = " + std::to_string(v) + ", a = " + std::to_string(a) + ")");
        break;
    case MapKind::skew:
        if (spec.dim_a < 2)
            throw DimensionGuard("skew map needs dimA >= 2");
        if (!spec.force && v < 2 * (a - 1))
            throw DimensionGuard("skew map needs v >= 2(a - 1) (v = " + std::to_string(v) + ", a = " + std::to_string(a) +
                                 ")");
        break;
    case MapKind::koszul:
        break;
    case MapKind::symplectic:
        if (v % 2 != 0)
            throw ParityGuard("symplectic map needs v = dimW - 1 even (v = " + std::to_string(v) + ")");
        break;
    }
}

Matrix random_surjection(std::size_t dim_source, std::size_t dim_w, std::uint64_t seed, PrimeField field)
{
    if (dim_source < dim_w)
        throw NotSurjectivePossible("no surjection from a " + std::to_string(dim_source) + "-dimensional space onto a " +
                                    std::to_string(dim_w) + "-dimensional one");
    // mt19937_64 output is fixed by the standard; reducing it directly keeps
    // matrices identical across standard libraries.
    std::mt19937_64 rng(seed);
    while (true) {
        Matrix m(field, dim_w, dim_source);
        for (std::size_t r = 0; r < dim_w; ++r)
            for (std::size_t c = 0; c < dim_source; ++c)
                m(r, c) = static_cast<la::Scalar>(rng() % field.prime());
        if (la::rank(m) == dim_w)
            return m;
    }
}

Morphism general_map(const MapSpec& spec)
{
    check_guards({MapKind::general, spec.dim_a, spec.dim_b, spec.dim_w, spec.prime, spec.seed, spec.force});
    const PrimeField field(spec.prime);
    const int n = spec.dim_w;
    const int a = spec.dim_a - 1;
    const Matrix sigma = random_surjection(static_cast<std::size_t>(spec.dim_a * spec.dim_b), n, spec.seed, field);
    FreeGradedModule source = FreeGradedModule::from_omega(n, std::vector<int>(spec.dim_a, a));
    FreeGradedModule target = FreeGradedModule::from_omega(n, std::vector<int>(spec.dim_b, a - 1));
    std::vector<ExtElement> entries;
    for (int j = 0; j < spec.dim_b; ++j)
        for (int i = 0; i < spec.dim_a; ++i)
            entries.push_back(form_of_column(sigma, static_cast<std::size_t>(i * spec.dim_b + j), n));
    return Morphism(std::move(source), std::move(target), std::move(entries));
}

Morphism symmetric_map(const MapSpec& spec)
{
    check_guards({MapKind::symmetric, spec.dim_a, spec.dim_a, spec.dim_w, spec.prime, spec.seed, spec.force});
    const PrimeField field(spec.prime);
    const int n = spec.dim_w;
    const int dim_a = spec.dim_a;
    const int a = dim_a - 1;
    // Basis of S^2 A^*: alpha_i alpha_j, i <= j, in lexicographic order.
    std::vector<std::vector<std::size_t>> index(dim_a, std::vector<std::size_t>(dim_a));
    std::size_t count = 0;
    for (int i = 0; i < dim_a; ++i)
        for (int j = i; j < dim_a; ++j)
            index[i][j] = index[j][i] = count++;
    const Matrix sigma = random_surjection(count, n, spec.seed, field);
    FreeGradedModule source = FreeGradedModule::from_omega(n, std::vector<int>(dim_a, a));
    FreeGradedModule target = FreeGradedModule::from_omega(n, std::vector<int>(dim_a, a - 1));
    std::vector<ExtElement> entries;
    for (int j = 0; j < dim_a; ++j)
        for (int i = 0; i < dim_a; ++i)
            entries.push_back(form_of_column(sigma, index[i][j], n));
    return Morphism(std::move(source), std::move(target), std::move(entries));
}

Morphism skew_map(const MapSpec& spec)
{
    check_guards({MapKind::skew, spec.dim_a, spec.dim_a, spec.dim_w, spec.prime, spec.seed, spec.force});
    const PrimeField field(spec.prime);
    const int n = spec.dim_w;
    const int dim_a = spec.dim_a;
    const int a = dim_a - 1;
    // Basis of wedge^2 A^*: alpha_i ^ alpha_j, i < j, in lexicographic order.
    std::vector<std::vector<std::size_t>> index(dim_a, std::vector<std::size_t>(dim_a));
    std::size_t count = 0;
    for (int i = 0; i < dim_a; ++i)
        for (int j = i + 1; j < dim_a; ++j)
            index[i][j] = index[j][i] = count++;
    const Matrix sigma = random_surjection(count, n, spec.seed, field);
    FreeGradedModule source = FreeGradedModule::from_omega(n, std::vector<int>(dim_a, a - 1));
    FreeGradedModule target = FreeGradedModule::from_omega(n, std::vector<int>(dim_a, a - 2));
    std::vector<ExtElement> entries;
    for (int j = 0; j < dim_a; ++j)
        for (int i = 0; i < dim_a; ++i) {
            if (i == j) {
                entries.emplace_back(n, field);
                continue;
            }
            ExtElement e = form_of_column(sigma, index[i][j], n);
            entries.push_back(i < j ? e : e.scaled(field.neg(1)));
        }
    return Morphism(std::move(source), std::move(target), std::move(entries));
}

Morphism koszul_map(int dim_w, PrimeField field)
{
    if (dim_w < 1)
        throw DimensionGuard("dimW must be at least 1");
    const int n = dim_w;
    FreeGradedModule source = FreeGradedModule::from_omega(n, std::vector<int>(n, 1));
    FreeGradedModule target = FreeGradedModule::from_omega(n, std::vector<int>(n, -1));
    std::vector<ExtElement> entries;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const auto ej = ExtElement::monomial(n, field, Monomial{1} << j);
            const auto ei = ExtElement::monomial(n, field, Monomial{1} << i);
            entries.push_back(ext::wedge_mul(ej, ei));
        }
    return Morphism(std::move(source), std::move(target), std::move(entries));
}

Morphism symplectic_map(int dim_w, PrimeField field)
{
    check_guards({MapKind::symplectic, 0, 0, dim_w, field.prime(), 0, false});
    const int n = dim_w;
    const int v = n - 1;
    // Maximal-rank alternating form on the span of e_1 .. e_v; e_0 is left out
    // because an odd-dimensional space carries no non-degenerate one.
    ExtElement s(n, field);
    for (int i = 1; i + 1 <= v; i += 2)
        s.add_term((Monomial{1} << i) | (Monomial{1} << (i + 1)), 1);
    ExtElement t = ExtElement::monomial(n, field, 0);
    for (int k = 0; k < v / 2; ++k)
        t = ext::wedge_mul(t, s);
    FreeGradedModule source = FreeGradedModule::from_omega(n, {v});
    FreeGradedModule target = FreeGradedModule::from_omega(n, {0});
    return Morphism(std::move(source), std::move(target), {t});
}

Morphism make_map(const MapSpec& spec)
{
    switch (spec.kind) {
    case MapKind::general:
        return general_map(spec);
    case MapKind::symmetric:
        return symmetric_map(spec);
    case MapKind::skew:
        return skew_map(spec);
    case MapKind::koszul:
        return koszul_map(spec.dim_w, PrimeField(spec.prime));
    case MapKind::symplectic:
        return symplectic_map(spec.dim_w, PrimeField(spec.prime));
    }
    throw std::invalid_argument("unknown map kind");
}

} // namespace tate::maps
