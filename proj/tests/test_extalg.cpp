#include "tate/extalg.hpp"
#include "tate/mapgen.hpp"

#include "oracles.hpp"

#include "doctest.h"

#include <random>

using namespace tate::ext;
using tate::la::Matrix;
using tate::la::PrimeField;

namespace {

const PrimeField F(32003);

ExtElement mono(int n, Monomial m, Scalar c = 1)
{
    return ExtElement::monomial(n, F, m, c);
}

ExtElement random_homogeneous(std::mt19937_64& rng, int n, int size)
{
    ExtElement x(n, F);
    if (size < 0 || size > n)
        return x;
    for (Monomial m : basis_of_degree(n, -size))
        x.add_term(m, static_cast<Scalar>(rng() % F.prime()));
    return x;
}

ExtElement random_element(std::mt19937_64& rng, int n)
{
    ExtElement x(n, F);
    for (Monomial m = 0; m < (Monomial{1} << n); ++m)
        if (rng() % 3 == 0)
            x.add_term(m, static_cast<Scalar>(rng() % F.prime()));
    return x;
}

Morphism random_morphism(std::mt19937_64& rng, const FreeGradedModule& s, const FreeGradedModule& t)
{
    std::vector<ExtElement> entries;
    for (std::size_t i = 0; i < t.rank(); ++i)
        for (std::size_t j = 0; j < s.rank(); ++j)
            entries.push_back(random_homogeneous(rng, s.dim_v(), -(t.twist(i) - s.twist(j))));
    return Morphism(s, t, std::move(entries));
}

std::vector<std::size_t> dims_by_degree_desc(const GradedModule& m)
{
    std::vector<std::size_t> out;
    auto h = m.hilbert_function();
    for (auto it = h.rbegin(); it != h.rend(); ++it)
        out.push_back(it->second);
    return out;
}

} // namespace

TEST_CASE("wedge product examples")
{
    const int n = 3;
    CHECK(wedge_mul(mono(n, 0b011), mono(n, 0b010)).is_zero());
    CHECK(wedge_mul(mono(n, 0b010), mono(n, 0b001)) == mono(n, 0b011, F.neg(1)));
    CHECK(wedge_mul(mono(n, 0b001), mono(n, 0b010)) == mono(n, 0b011));
    CHECK(wedge_mul(mono(n, 0b001), mono(n, 0b110)) == mono(n, 0b111));
    CHECK_THROWS(wedge_mul(mono(3, 1), mono(4, 1)));
}

TEST_CASE("product sign matches the shuffle oracle")
{
    for (int n = 0; n <= 6; ++n)
        for (Monomial s = 0; s < (Monomial{1} << n); ++s)
            for (Monomial t = 0; t < (Monomial{1} << n); ++t) {
                if (s & t)
                    continue;
                CHECK(product_sign(s, t) == oracle::shuffle_sign(s, t));
            }
}

TEST_CASE("graded commutativity and associativity")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int i = static_cast<int>(rng() % (n + 1)), j = static_cast<int>(rng() % (n + 1));
        ExtElement x = random_homogeneous(rng, n, i);
        ExtElement y = random_homogeneous(rng, n, j);
        ExtElement yx = wedge_mul(y, x);
        CHECK(wedge_mul(x, y) == ((i * j) % 2 ? yx.scaled(F.neg(1)) : yx));

        ExtElement a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
        CHECK(wedge_mul(wedge_mul(a, b), c) == wedge_mul(a, wedge_mul(b, c)));
        CHECK(wedge_mul(a, b + c) == wedge_mul(a, b) + wedge_mul(a, c));
    }
}

TEST_CASE("element degrees")
{
    ExtElement x = mono(4, 0b0011) + mono(4, 0b1100);
    CHECK(x.is_homogeneous());
    CHECK(x.degree() == -2);
    CHECK_FALSE((x + mono(4, 0b1)).is_homogeneous());
    CHECK_FALSE((x + mono(4, 0b1)).degree());
    CHECK((x - x).is_zero());
    CHECK(x.coefficient(0b0011) == 1);
    CHECK(x.coefficient(0b0101) == 0);
}

TEST_CASE("basis_of_degree")
{
    CHECK(basis_of_degree(3, -2) == std::vector<Monomial>{0b011, 0b101, 0b110});
    CHECK(basis_of_degree(3, 0) == std::vector<Monomial>{0});
    CHECK(basis_of_degree(3, 1).empty());
    CHECK(basis_of_degree(3, -4).empty());
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            auto b = basis_of_degree(n, -k);
            CHECK(b.size() == oracle::choose(n, k));
            // colex on a fixed size is numeric order of the bitmasks
            CHECK(std::is_sorted(b.begin(), b.end()));
            for (std::size_t i = 0; i < b.size(); ++i)
                CHECK(MonomialBasis::get(n).index(b[i]) == i);
        }
}

TEST_CASE("free module slices")
{
    FreeGradedModule e(3, {0});
    CHECK(e.lowest_degree() == -3);
    CHECK(e.highest_degree() == 0);
    CHECK(e.slice_dim(0) == 1);
    CHECK(e.slice_dim(-1) == 3);
    CHECK(e.slice_dim(1) == 0);

    FreeGradedModule w = FreeGradedModule::from_omega(3, {1, 0});
    CHECK(w.twists() == std::vector<int>{-2, -3});
    CHECK(w.omega_twists() == std::vector<int>{1, 0});
    std::size_t total = 0;
    for (int d = w.lowest_degree(); d <= w.highest_degree(); ++d)
        total += w.slice_dim(d);
    CHECK(total == 2 * 8);

    CHECK(FreeGradedModule(3, {}).lowest_degree() > FreeGradedModule(3, {}).highest_degree());
}

TEST_CASE("degree matrix examples")
{
    const int n = 2;
    Morphism by_e0(FreeGradedModule(n, {0}), FreeGradedModule(n, {-1}), {mono(n, 0b01)});
    Matrix m = morphism_degree_matrix(by_e0, 0);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 1);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 0) == 0);

    FreeGradedModule e(3, {0});
    Morphism zero = Morphism::zero(e, e, F);
    Morphism id(e, e, {mono(3, 0)});
    for (int d = -3; d <= 0; ++d) {
        CHECK(zero.degree_matrix(d).is_zero());
        CHECK(id.degree_matrix(d) == Matrix::identity(F, e.slice_dim(d)));
    }
    CHECK(zero.is_zero());
    CHECK_FALSE(id.is_minimal());
    CHECK(by_e0.is_minimal());
}

TEST_CASE("homogeneity is enforced")
{
    FreeGradedModule e(3, {0});
    CHECK_THROWS_AS(Morphism(e, e, {mono(3, 0b1)}), HomogeneityError);
    CHECK_THROWS_AS(Morphism(e, FreeGradedModule(3, {-1}), {mono(3, 0b1) + mono(3, 0b11)}), HomogeneityError);
    CHECK_THROWS(Morphism(e, e, {}));
}

TEST_CASE("composition equals the product of degree matrices")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto twists = [&](int count) {
            std::vector<int> t;
            for (int i = 0; i < count; ++i)
                t.push_back(-static_cast<int>(rng() % 3));
            return t;
        };
        FreeGradedModule a(n, twists(1 + rng() % 3));
        std::vector<int> bt = twists(1 + rng() % 3), ct = twists(1 + rng() % 3);
        for (int& t : bt)
            t -= 1;
        for (int& t : ct)
            t -= 3;
        FreeGradedModule bb(n, bt), c(n, ct);
        Morphism f = random_morphism(rng, a, bb);
        Morphism g = random_morphism(rng, bb, c);
        Morphism gf = compose(f, g);
        for (int d = -n - 4; d <= 2; ++d)
            CHECK(gf.degree_matrix(d) == g.degree_matrix(d) * f.degree_matrix(d));
    }
    FreeGradedModule e(2, {0});
    CHECK_THROWS(compose(Morphism::zero(e, e, F), Morphism::zero(FreeGradedModule(2, {1}), e, F)));
}

TEST_CASE("image_module examples")
{
    FreeGradedModule e(3, {0});
    GradedModule im = image_module(Morphism(e, e, {mono(3, 0)}));
    CHECK(im.hilbert_function() == std::map<int, std::size_t>{{-3, 1}, {-2, 3}, {-1, 3}, {0, 1}});
    CHECK(image_module(Morphism::zero(e, e, F)).is_zero());

    GradedModule k3 = image_module(tate::maps::koszul_map(3, F));
    CHECK(dims_by_degree_desc(k3) == std::vector<std::size_t>{3, 3});
    CHECK(k3.satisfies_relations());
    GradedModule k4 = image_module(tate::maps::koszul_map(4, F));
    CHECK(dims_by_degree_desc(k4) == std::vector<std::size_t>{4, 6, 4});
}

TEST_CASE("image and kernel dimensions follow the degree matrices")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        FreeGradedModule s(n, {0, 0, -1});
        FreeGradedModule t(n, {-1, -2});
        Morphism phi = random_morphism(rng, s, t);
        GradedModule im = image_module(phi);
        GradedModule ker = kernel_module(phi);
        CHECK(im.satisfies_relations());
        CHECK(ker.satisfies_relations());
        for (int d = -n - 3; d <= 1; ++d) {
            const std::size_t r = tate::la::rank(phi.degree_matrix(d));
            CHECK(im.slice_dim(d) == r);
            CHECK(ker.slice_dim(d) + r == s.slice_dim(d));
        }
    }
}

TEST_CASE("dual_module examples")
{
    GradedModule e = free_module(FreeGradedModule(3, {0}), F);
    GradedModule de = dual_module(e);
    CHECK(de.hilbert_function() == std::map<int, std::size_t>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
    CHECK(de.satisfies_relations());
    CHECK(dual_module(GradedModule(3, F)).is_zero());

    GradedModule k = image_module(tate::maps::koszul_map(3, F));
    GradedModule kk = dual_module(dual_module(k));
    CHECK(kk.hilbert_function() == k.hilbert_function());
    CHECK(kk.satisfies_relations());
}

TEST_CASE("dual morphism transposes degree matrices")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3;
        Morphism phi = random_morphism(rng, FreeGradedModule(n, {0, -1}), FreeGradedModule(n, {-1, -2, -2}));
        Morphism dual = dual_morphism(phi);
        CHECK(dual.source().twists() == std::vector<int>{-2, -1, -1});
        CHECK(dual.target().twists() == std::vector<int>{-3, -2});
        for (int d = -6; d <= 6; ++d)
            CHECK(tate::la::rank(dual.degree_matrix(d)) == tate::la::rank(phi.degree_matrix(-d)));
    }
}

TEST_CASE("dual morphism is an involutive contravariant functor")
{
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 2);
        FreeGradedModule a(n, {0, -1}), b(n, {-1, -2, -2}), c(n, {-3, -4});
        Morphism f = random_morphism(rng, a, b);
        Morphism g = random_morphism(rng, b, c);
        Morphism lhs = dual_morphism(compose(f, g));
        Morphism rhs = compose(dual_morphism(g), dual_morphism(f));
        for (std::size_t i = 0; i < lhs.target().rank(); ++i)
            for (std::size_t j = 0; j < lhs.source().rank(); ++j)
                CHECK(lhs.entry(i, j) == rhs.entry(i, j));
        Morphism ff = dual_morphism(dual_morphism(f));
        CHECK(ff.source().twists() == f.source().twists());
        for (std::size_t i = 0; i < f.target().rank(); ++i)
            for (std::size_t j = 0; j < f.source().rank(); ++j)
                CHECK(ff.entry(i, j) == f.entry(i, j));
    }
}
