#include "tate/mapgen.hpp"
#include "tate/resolve.hpp"
#include "tate/weights.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <random>

using namespace tate;
using ext::ExtElement;
using ext::FreeGradedModule;
using ext::GradedModule;
using ext::Monomial;
using ext::Morphism;
using la::Matrix;
using la::PrimeField;
using res::TermEntry;

namespace {

const PrimeField F(32003);

// One-dimensional module k sitting in degree d.
GradedModule residue_field(int n, int d)
{
    GradedModule::Slice s;
    s.dim = 1;
    for (int k = 0; k < n; ++k)
        s.action.emplace_back(F, 0, 1);
    return GradedModule(n, F, d, {s});
}

std::size_t total(const std::map<int, std::size_t>& m)
{
    std::size_t t = 0;
    for (const auto& [d, c] : m)
        t += c;
    return t;
}

std::vector<std::vector<std::int64_t>> rows_of(const Matrix& m)
{
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

// Offsets of each generator block in the degree-d slice, from the block sizes.
std::vector<std::size_t> block_offsets(const std::vector<int>& twists, int n, int d)
{
    std::vector<std::size_t> off;
    std::size_t at = 0;
    for (int s : twists) {
        off.push_back(at);
        at += oracle::choose(n, -(d + s));
    }
    off.push_back(at);
    return off;
}

// e_k : F_d -> F_{d-1} on a free module, written out from the sign rule.
std::vector<std::vector<std::int64_t>> free_action(const std::vector<int>& twists, int n, int k, int d)
{
    auto src = block_offsets(twists, n, d);
    auto dst = block_offsets(twists, n, d - 1);
    std::vector<std::vector<std::int64_t>> a(dst.back(), std::vector<std::int64_t>(src.back(), 0));
    for (std::size_t j = 0; j < twists.size(); ++j) {
        const int size = -(d + twists[j]);
        if (size < 0 || size >= n)
            continue;
        auto from = ext::basis_of_degree(n, -size);
        auto to = ext::basis_of_degree(n, -size - 1);
        for (std::size_t i = 0; i < from.size(); ++i) {
            const Monomial s = from[i];
            if (s >> k & 1)
                continue;
            const Monomial t = s | (Monomial{1} << k);
            const auto pos = std::find(to.begin(), to.end(), t) - to.begin();
            a[dst[j] + pos][src[j] + i] = oracle::shuffle_sign(Monomial{1} << k, s) < 0 ? F.prime() - 1 : 1;
        }
    }
    return a;
}

std::vector<std::vector<std::int64_t>> mul(const std::vector<std::vector<std::int64_t>>& a,
                                           const std::vector<std::int64_t>& v)
{
    std::vector<std::vector<std::int64_t>> out(1, std::vector<std::int64_t>(a.size(), 0));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            out[0][r] = (out[0][r] + a[r][c] * v[c]) % F.prime();
    return out;
}

// Generators of ker(phi) by degree: dim K_d minus the span of e_k K_{d+1}.
std::map<int, std::size_t> kernel_generators(const Morphism& phi)
{
    const int n = phi.source().dim_v();
    const auto twists = phi.source().twists();
    const FreeGradedModule& s = phi.source();
    std::map<int, std::vector<std::vector<std::int64_t>>> kernels;
    for (int d = s.lowest_degree(); d <= s.highest_degree(); ++d)
        kernels[d] = oracle::nullspace_mod(rows_of(phi.degree_matrix(d)), s.slice_dim(d), F.prime());
    std::map<int, std::size_t> gens;
    for (int d = s.lowest_degree(); d <= s.highest_degree(); ++d) {
        std::vector<std::vector<std::int64_t>> span;
        for (const auto& v : kernels[d + 1])
            for (int k = 0; k < n; ++k)
                span.push_back(mul(free_action(twists, n, k, d + 1), v)[0]);
        const std::size_t generated = span.empty() ? 0 : oracle::rank_mod(span, F.prime());
        if (kernels[d].size() > generated)
            gens[d] = kernels[d].size() - generated;
    }
    return gens;
}

std::vector<TermEntry> mirrored(const std::vector<TermEntry>& in, int n)
{
    std::vector<TermEntry> out;
    for (const auto& e : in)
        out.push_back({n - e.omega_twist, e.rank});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.omega_twist < y.omega_twist; });
    return out;
}

} // namespace

TEST_CASE("top of small modules")
{
    GradedModule k3 = ext::image_module(maps::koszul_map(3, F));
    auto top = res::top_of_module(k3);
    REQUIRE(top.size() == 1);
    CHECK(top.begin()->second == 3);

    CHECK(res::top_of_module(ext::free_module(FreeGradedModule(3, {0}), F)) == std::map<int, std::size_t>{{0, 1}});
    CHECK(res::top_of_module(GradedModule(3, F)).empty());
}

TEST_CASE("projective cover examples")
{
    auto e = res::projective_cover_step(ext::free_module(FreeGradedModule(3, {0}), F));
    CHECK(e.cover.twists() == std::vector<int>{0});
    CHECK(e.kernel.is_zero());

    auto k = res::projective_cover_step(residue_field(2, 0));
    CHECK(k.cover.twists() == std::vector<int>{0});
    CHECK(k.kernel.hilbert_function() == std::map<int, std::size_t>{{-2, 1}, {-1, 2}});
    CHECK(k.kernel.satisfies_relations());

    auto kz = res::projective_cover_step(ext::image_module(maps::koszul_map(3, F)));
    CHECK(kz.cover.rank() == 3);
    // omega_E(1) (x) V
    CHECK(kz.cover.omega_twists() == std::vector<int>{1, 1, 1});

    CHECK(res::projective_cover_step(GradedModule(3, F)).cover.rank() == 0);
}

TEST_CASE("injective hull examples")
{
    auto k = res::injective_hull_step(residue_field(2, 0));
    CHECK(k.hull.omega_twists() == std::vector<int>{0});
    CHECK(k.cokernel.module.total_dim() == 3);

    auto e = res::injective_hull_step(ext::free_module(FreeGradedModule(3, {0}), F));
    CHECK(e.hull.twists() == std::vector<int>{0});
    CHECK(e.cokernel.module.is_zero());

    CHECK(res::injective_hull_step(GradedModule(3, F)).hull.rank() == 0);

    CHECK(res::socle_of_module(residue_field(3, 2)) == std::map<int, std::size_t>{{2, 1}});
}

TEST_CASE("cover and hull ranks equal top and socle multiplicities")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3;
        FreeGradedModule s(n, {0, 0, -1});
        FreeGradedModule t(n, {-1, -1, -2});
        std::vector<ExtElement> entries;
        for (std::size_t i = 0; i < t.rank(); ++i)
            for (std::size_t j = 0; j < s.rank(); ++j) {
                ExtElement x(n, F);
                const int size = -(t.twist(i) - s.twist(j));
                for (Monomial m : ext::basis_of_degree(n, -size))
                    if (rng() % 2)
                        x.add_term(m, static_cast<la::Scalar>(rng() % F.prime()));
                entries.push_back(x);
            }
        Morphism phi(s, t, entries);
        for (const GradedModule& m : {ext::image_module(phi), ext::kernel_module(phi)}) {
            auto cover = res::projective_cover_step(m);
            CHECK(cover.cover.rank() == total(res::top_of_module(m)));
            CHECK(cover.kernel.satisfies_relations());
            auto hull = res::injective_hull_step(m);
            CHECK(hull.hull.rank() == total(res::socle_of_module(m)));
            CHECK(hull.cokernel.module.satisfies_relations());
            for (int d = m.lowest_degree(); d <= m.highest_degree(); ++d) {
                CHECK(cover.kernel.slice_dim(d) + m.slice_dim(d) == cover.cover.slice_dim(d));
                CHECK(hull.cokernel.module.slice_dim(d) + m.slice_dim(d) == hull.hull.slice_dim(d));
            }
        }
    }
}

TEST_CASE("window of an isomorphism")
{
    FreeGradedModule w = FreeGradedModule::from_omega(3, {0});
    Morphism id(w, w, {ExtElement::monomial(3, F, 0)});
    auto window = res::build_tate(id, -2, 3);
    for (int p = -2; p <= 3; ++p)
        CHECK(window.term(p).rank() == ((p == 0 || p == 1) ? 1u : 0u));
    auto table = res::term_table(window);
    CHECK(table.at(-1).empty());
    CHECK(table.at(2).empty());
    auto ex = res::verify_exactness(window);
    CHECK(ex.all_pass());
    CHECK_FALSE(ex.seed_minimal);

    CHECK_THROWS_AS(res::build_tate(id, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(res::build_tate(id, -2, 0), std::invalid_argument);
}

TEST_CASE("one step left of the truncated Koszul map")
{
    for (int n : {3, 4}) {
        Morphism phi = maps::koszul_map(n, F);
        auto window = res::build_tate(phi, -1, 1);
        std::vector<TermEntry> expected;
        for (const auto& [d, count] : kernel_generators(phi))
            expected.push_back({n - d, count}); // a generator in degree d spans E(-d)
        std::sort(expected.begin(), expected.end(),
                  [](const auto& x, const auto& y) { return x.omega_twist < y.omega_twist; });
        CHECK(res::term_entries(window.term(-1)) == expected);
        CHECK(res::verify_exactness(window).all_pass());
    }
}

TEST_CASE("term table of a general map")
{
    maps::MapSpec spec{maps::MapKind::general, 2, 2, 3, F.prime(), 7, false};
    auto window = res::build_tate(maps::general_map(spec), -3, 4);
    auto table = res::term_table(window);
    CHECK(table.at(2) == std::vector<TermEntry>{{-2, 4}});
    CHECK(table.at(0) == std::vector<TermEntry>{{1, 2}});
    CHECK(table.at(1) == std::vector<TermEntry>{{0, 2}});

    // Line bundle O(-2, 1) on P^1 x P^1: T^p = sum_i omega_E(i - p) (x) H^i L(p - i).
    for (int p = -3; p <= 4; ++p) {
        std::vector<TermEntry> expected;
        for (int i = 0; i <= 2; ++i) {
            std::uint64_t h = 0;
            for (int j = 0; j <= i; ++j)
                h += oracle::projective_cohomology(1, j, p - i - 2) * oracle::projective_cohomology(1, i - j, p - i + 1);
            if (h)
                expected.push_back({i - p, h});
        }
        CHECK_MESSAGE(table.at(p) == expected, "p = " << p);
    }
    CHECK(res::verify_exactness(window).all_pass());
}

TEST_CASE("windows of the generated maps pass the structural checks")
{
    std::vector<Morphism> maps_to_check{
        maps::symmetric_map({maps::MapKind::symmetric, 2, 2, 3, F.prime(), 1, false}),
        maps::skew_map({maps::MapKind::skew, 3, 3, 3, F.prime(), 2, false}),
        maps::general_map({maps::MapKind::general, 2, 2, 4, F.prime(), 3, false}),
        maps::koszul_map(3, F),
        maps::symplectic_map(3, F),
    };
    for (const auto& phi : maps_to_check) {
        auto ex = res::verify_exactness(res::build_tate(phi, -2, 3));
        CHECK(ex.d_squared_zero);
        CHECK(ex.interior_exact);
        CHECK(ex.minimal);
        CHECK(ex.seed_minimal);
        CHECK_FALSE(ex.ledger.empty());
    }
}

TEST_CASE("corrupted windows are caught")
{
    maps::MapSpec spec{maps::MapKind::symmetric, 2, 2, 3, F.prime(), 5, false};
    const auto good = res::build_tate(maps::symmetric_map(spec), -2, 3);
    REQUIRE(res::verify_exactness(good).all_pass());

    for (int p = -2; p < 3; ++p) {
        auto bad = good;
        Morphism& d = bad.differentials[p - bad.p_min];
        bool changed = false;
        for (std::size_t i = 0; i < d.target().rank() && !changed; ++i)
            for (std::size_t j = 0; j < d.source().rank() && !changed; ++j)
                if (!d.entry(i, j).is_zero()) {
                    d.entry(i, j) = ExtElement(d.source().dim_v(), F);
                    changed = true;
                }
        REQUIRE(changed);
        auto ex = res::verify_exactness(bad);
        CHECK_FALSE(ex.all_pass());
    }

    // A degree-0 unit entry off the seed position breaks minimality.
    FreeGradedModule w = FreeGradedModule::from_omega(3, {0});
    res::TateWindow units;
    units.p_min = -1;
    units.p_max = 1;
    units.modules = {w, w, w};
    units.differentials = {Morphism(w, w, {ExtElement::monomial(3, F, 0)}), Morphism::zero(w, w, F)};
    auto ex = res::verify_exactness(units);
    CHECK_FALSE(ex.minimal);
    CHECK(ex.non_minimal == std::vector<int>{-1});
}

TEST_CASE("dual morphism gives the mirrored window")
{
    maps::MapSpec spec{maps::MapKind::general, 2, 2, 3, F.prime(), 11, false};
    Morphism phi = maps::general_map(spec);
    Morphism dual = ext::dual_morphism(phi);
    const int n = 3;
    auto table = res::term_table(res::build_tate(phi, -3, 4));
    auto dual_table = res::term_table(res::build_tate(dual, -3, 4));
    for (int p = -3; p <= 4; ++p)
        CHECK_MESSAGE(dual_table.at(1 - p) == mirrored(table.at(p), n), "p = " << p);
}

TEST_CASE("retry policy")
{
    auto koszul = [](std::uint64_t) { return maps::koszul_map(3, F); };
    auto yes = [](const res::TermTable&) { return true; };
    auto no = [](const res::TermTable&) { return false; };

    auto pass = res::build_with_retries(koszul, -1, 2, 10, 3, yes);
    CHECK(pass.status == res::RunStatus::pass);
    CHECK(pass.attempts.size() == 1);
    CHECK(pass.final_attempt().seed == 10);

    auto stable = res::build_with_retries(koszul, -1, 2, 10, 3, no);
    CHECK(stable.status == res::RunStatus::mismatch);
    REQUIRE(stable.attempts.size() == 4);
    CHECK(stable.attempts[3].seed == 13);

    auto varying = [](std::uint64_t seed) {
        return seed % 2 ? maps::koszul_map(3, F) : maps::symplectic_map(3, F);
    };
    auto suspect = res::build_with_retries(varying, -1, 2, 0, 2, no);
    CHECK(suspect.status == res::RunStatus::genericity_suspect);

    int calls = 0;
    auto second = [&](const res::TermTable&) { return ++calls == 2; };
    auto later = res::build_with_retries(koszul, -1, 2, 0, 3, second);
    CHECK(later.status == res::RunStatus::pass);
    CHECK(later.attempts.size() == 2);

    CHECK(res::to_string(res::RunStatus::genericity_suspect) == "GENERICITY_SUSPECT");
    CHECK_THROWS(res::build_with_retries(koszul, -1, 2, 0, -1, yes));
}
