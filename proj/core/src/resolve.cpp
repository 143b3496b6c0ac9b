#include "tate/resolve.hpp"

#include <algorithm>
#include <string>

namespace tate::res {

using ext::Monomial;
using ext::MonomialBasis;
using la::Scalar;

namespace {

// Basis positions of M_d complementing E_+ M_d = sum_k e_k M_{d+1}.
std::vector<std::size_t> top_positions(const GradedModule& m, int d)
{
    const std::size_t dim = m.slice_dim(d);
    la::SpanBuilder span(m.field(), dim);
    for (int k = 0; k < m.dim_v() && !span.full(); ++k) {
        const Matrix a = m.action(k, d + 1);
        for (std::size_t c = 0; c < a.cols() && !span.full(); ++c) {
            std::vector<Scalar> v(dim);
            for (std::size_t r = 0; r < dim; ++r)
                v[r] = a(r, c);
            span.insert(std::move(v));
        }
    }
    return span.non_pivots();
}

std::vector<Generator> top_generators(const GradedModule& m)
{
    std::vector<Generator> gens;
    for (int d = m.highest_degree(); d >= m.lowest_degree(); --d)
        for (std::size_t i : top_positions(m, d))
            gens.push_back({d, i});
    return gens;
}

Matrix unit_column(PrimeField field, std::size_t dim, std::size_t i)
{
    Matrix v(field, dim, 1);
    v(i, 0) = 1;
    return v;
}

std::vector<Scalar> column(const Matrix& m, std::size_t c)
{
    std::vector<Scalar> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        v[r] = m(r, c);
    return v;
}

} // namespace

std::map<int, std::size_t> top_of_module(const GradedModule& m)
{
    std::map<int, std::size_t> out;
    for (const auto& g : top_generators(m))
        ++out[g.degree];
    return out;
}

std::map<int, std::size_t> socle_of_module(const GradedModule& m)
{
    std::map<int, std::size_t> out;
    for (const auto& [d, mult] : top_of_module(ext::dual_module(m)))
        out[-d] = mult;
    return out;
}

CoverStep projective_cover_step(const GradedModule& m)
{
    const int n = m.dim_v();
    const PrimeField field = m.field();
    const auto& basis = MonomialBasis::get(n);

    CoverStep step{FreeGradedModule(n, {}), top_generators(m), {}, GradedModule(n, field)};
    std::vector<int> twists;
    for (const auto& g : step.generators)
        twists.push_back(-g.degree);
    step.cover = FreeGradedModule(n, twists);
    const FreeGradedModule& p = step.cover;
    if (p.rank() == 0)
        return step;

    // images[j][S] = e_S g_j, built from e_S = e_{min S} e_{S - min S}.
    std::vector<std::vector<Matrix>> images(p.rank(), std::vector<Matrix>(std::size_t{1} << n));
    for (std::size_t j = 0; j < p.rank(); ++j) {
        const int dj = step.generators[j].degree;
        auto& img = images[j];
        img[0] = unit_column(field, m.slice_dim(dj), step.generators[j].index);
        for (int size = 1; size <= n; ++size)
            for (Monomial s : basis.of_size(size)) {
                const int low = std::countr_zero(s);
                img[s] = m.action(low, dj - size + 1) * img[s & (s - 1)];
            }
    }

    const int lo = p.lowest_degree();
    const int hi = p.highest_degree();
    std::vector<la::Kernel> kernels;
    for (int e = lo; e <= hi; ++e) {
        Matrix cover(field, m.slice_dim(e), p.slice_dim(e));
        std::size_t col = 0;
        for (std::size_t j = 0; j < p.rank(); ++j) {
            const int size = p.block_size(j, e);
            if (size < 0)
                continue;
            for (Monomial s : basis.of_size(size)) {
                const Matrix& v = images[j][s];
                for (std::size_t r = 0; r < cover.rows(); ++r)
                    cover(r, col) = v(r, 0);
                ++col;
            }
        }
        la::Kernel ker = la::kernel(cover);
        const std::size_t rank = cover.cols() - ker.basis.cols();
        if (rank != m.slice_dim(e))
            throw InternalCoverFailure("projective cover is not surjective in degree " + std::to_string(e));
        kernels.push_back(std::move(ker));
        step.maps.emplace(e, std::move(cover));
    }
    for (int e = m.lowest_degree(); e <= m.highest_degree(); ++e)
        if ((e < lo || e > hi) && m.slice_dim(e) > 0)
            throw InternalCoverFailure("projective cover misses degree " + std::to_string(e));
    step.kernel = ext::submodule(p, field, lo, std::move(kernels));
    return step;
}

HullStep injective_hull_step(const GradedModule& m)
{
    const int n = m.dim_v();
    const PrimeField field = m.field();
    const auto& basis = MonomialBasis::get(n);
    const Monomial full = (Monomial{1} << n) - 1;

    // Generators of M^* in degree delta are coordinate functionals on M_{-delta}.
    const GradedModule dual = ext::dual_module(m);
    const std::vector<Generator> functionals = top_generators(dual);

    std::vector<int> twists;
    for (const auto& g : functionals)
        twists.push_back(g.degree - n); // omega_E(delta)
    HullStep step{FreeGradedModule(n, twists), {}, Quotient{GradedModule(n, field), {}}};
    const FreeGradedModule& hull = step.hull;

    // rows[j][S] = the functional c -> lambda_j(e_S c), on M_{d0 + |S|}.
    std::vector<std::vector<Matrix>> rows(functionals.size(), std::vector<Matrix>(std::size_t{1} << n));
    for (std::size_t j = 0; j < functionals.size(); ++j) {
        const int d0 = -functionals[j].degree;
        auto& r = rows[j];
        r[0] = unit_column(field, m.slice_dim(d0), functionals[j].index).transpose();
        for (int size = 1; size <= n; ++size)
            for (Monomial s : basis.of_size(size)) {
                const int top = 31 - std::countl_zero(s);
                r[s] = r[s & ~(Monomial{1} << top)] * m.action(top, d0 + size);
            }
    }

    // lambda_j(x c) as a functional in x is sum_S lambda_j(e_S c) e_S^*, and
    // e_S^* = sign(S, S^c) e_{S^c} * generator under omega_E = E(-n).
    auto embed = [&](int e) {
        Matrix out(field, hull.slice_dim(e), m.slice_dim(e));
        for (std::size_t j = 0; j < hull.rank(); ++j) {
            const int size = hull.block_size(j, e);
            if (size < 0)
                continue;
            const std::size_t off = hull.block_offset(j, e);
            for (Monomial t : basis.of_size(size)) {
                const Monomial s = full & ~t;
                const Matrix& r = rows[j][s];
                if (r.cols() != m.slice_dim(e))
                    continue;
                const bool negative = ext::product_sign(s, t) < 0;
                const std::size_t row = off + basis.index(t);
                for (std::size_t c = 0; c < r.cols(); ++c)
                    out(row, c) = negative ? field.neg(r(0, c)) : r(0, c);
            }
        }
        return out;
    };

    for (int e = m.lowest_degree(); e <= m.highest_degree(); ++e)
        step.embedding.emplace(e, embed(e));

    step.cokernel = quotient_of_free(hull, field, [&](int e) {
        auto it = step.embedding.find(e);
        return it != step.embedding.end() ? it->second : Matrix(field, hull.slice_dim(e), 0);
    });

    for (const auto& [e, emb] : step.embedding) {
        const std::size_t quotient_dim = step.cokernel.module.slice_dim(e);
        if (emb.rows() - quotient_dim != emb.cols())
            throw InternalCoverFailure("injective hull map is not injective in degree " + std::to_string(e));
    }
    return step;
}

Morphism morphism_from_images(const FreeGradedModule& source, const FreeGradedModule& target, PrimeField field,
                              const std::vector<std::vector<Scalar>>& images)
{
    const int n = source.dim_v();
    const auto& basis = MonomialBasis::get(n);
    if (images.size() != source.rank())
        throw la::DimensionMismatch("morphism_from_images: one image per source generator required");
    std::vector<ext::ExtElement> entries(target.rank() * source.rank(), ext::ExtElement(n, field));
    for (std::size_t j = 0; j < source.rank(); ++j) {
        const int d = source.generator_degree(j);
        const auto& img = images[j];
        if (img.size() != target.slice_dim(d))
            throw la::DimensionMismatch("morphism_from_images: image has the wrong length");
        for (std::size_t i = 0; i < target.rank(); ++i) {
            const int size = target.block_size(i, d);
            if (size < 0)
                continue;
            const std::size_t off = target.block_offset(i, d);
            auto& entry = entries[i * source.rank() + j];
            for (Monomial t : basis.of_size(size))
                entry.add_term(t, img[off + basis.index(t)]);
        }
    }
    if (entries.empty())
        return Morphism::zero(source, target, field);
    return Morphism(source, target, std::move(entries));
}

TateWindow build_tate(const Morphism& phi, int p_min, int p_max)
{
    if (!(p_min <= 0 && p_max >= 1))
        throw std::invalid_argument("build_tate: window must satisfy p_min <= 0 < 1 <= p_max");
    const PrimeField field = phi.field();

    std::vector<FreeGradedModule> left_modules;
    std::vector<Morphism> left_maps;
    GradedModule kernel = ext::kernel_module(phi);
    FreeGradedModule above = phi.source();
    for (int p = -1; p >= p_min; --p) {
        CoverStep step = projective_cover_step(kernel);
        std::vector<std::vector<Scalar>> images;
        for (const auto& g : step.generators)
            images.push_back(column(kernel.to_ambient(g.degree, unit_column(field, kernel.slice_dim(g.degree), g.index)), 0));
        left_maps.push_back(morphism_from_images(step.cover, above, field, images));
        left_modules.push_back(step.cover);
        above = step.cover;
        kernel = std::move(step.kernel);
    }

    std::vector<FreeGradedModule> right_modules;
    std::vector<Morphism> right_maps;
    Quotient quotient = quotient_of_free(phi.target(), field, [&](int d) { return phi.degree_matrix(d); });
    FreeGradedModule below = phi.target();
    for (int p = 2; p <= p_max; ++p) {
        HullStep step = injective_hull_step(quotient.module);
        std::vector<std::vector<Scalar>> images;
        for (std::size_t j = 0; j < below.rank(); ++j) {
            const int d = below.generator_degree(j);
            const std::size_t coord = below.block_offset(j, d); // the generator itself
            auto emb = step.embedding.find(d);
            if (emb == step.embedding.end()) {
                images.emplace_back(step.hull.slice_dim(d), 0);
                continue;
            }
            const Matrix& proj = quotient.projection.at(d);
            images.push_back(column(emb->second * proj.select_columns({coord}), 0));
        }
        right_maps.push_back(morphism_from_images(below, step.hull, field, images));
        right_modules.push_back(step.hull);
        below = step.hull;
        quotient = std::move(step.cokernel);
    }

    TateWindow w;
    w.p_min = p_min;
    w.p_max = p_max;
    for (auto it = left_modules.rbegin(); it != left_modules.rend(); ++it)
        w.modules.push_back(*it);
    w.modules.push_back(phi.source());
    w.modules.push_back(phi.target());
    for (auto& f : right_modules)
        w.modules.push_back(std::move(f));
    for (auto it = left_maps.rbegin(); it != left_maps.rend(); ++it)
        w.differentials.push_back(*it);
    w.differentials.push_back(phi);
    for (auto& d : right_maps)
        w.differentials.push_back(std::move(d));
    return w;
}

std::vector<TermEntry> term_entries(const FreeGradedModule& f)
{
    std::map<int, std::size_t> counts;
    for (int j : f.omega_twists())
        ++counts[j];
    std::vector<TermEntry> out;
    for (const auto& [twist, rank] : counts)
        out.push_back({twist, rank});
    return out;
}

std::vector<TermEntry> TermTable::at(int p) const
{
    for (const auto& row : rows)
        if (row.p == p)
            return row.entries;
    return {};
}

TermTable term_table(const TateWindow& window)
{
    TermTable table;
    for (int p = window.p_min; p <= window.p_max; ++p)
        table.rows.push_back({p, term_entries(window.term(p))});
    return table;
}

ExactnessReport verify_exactness(const TateWindow& window)
{
    ExactnessReport report;
    for (int p = window.p_min; p < window.p_max; ++p) {
        const Morphism& d = window.differential(p);
        const bool minimal = d.is_minimal();
        if (p == TateWindow::seed_position)
            report.seed_minimal = minimal;
        else if (!minimal) {
            report.minimal = false;
            report.non_minimal.push_back(p);
        }
        if (p + 1 < window.p_max) {
            const Morphism& next = window.differential(p + 1);
            if (!ext::compose(d, next).is_zero()) {
                report.d_squared_zero = false;
                report.d_squared_failures.push_back(p);
            }
        }
    }
    for (int p = window.p_min + 1; p < window.p_max; ++p) {
        const FreeGradedModule& t = window.term(p);
        const Morphism& in = window.differential(p - 1);
        const Morphism& out = window.differential(p);
        for (int d = t.lowest_degree(); d <= t.highest_degree(); ++d) {
            ExactnessEntry e{p, d, t.slice_dim(d), la::rank(in.degree_matrix(d)), la::rank(out.degree_matrix(d)), false};
            e.exact = e.rank_in + e.rank_out == e.slice_dim;
            if (!e.exact)
                report.interior_exact = false;
            report.ledger.push_back(e);
        }
    }
    return report;
}

std::string to_string(RunStatus status)
{
    switch (status) {
    case RunStatus::pass:
        return "PASS";
    case RunStatus::genericity_suspect:
        return "GENERICITY_SUSPECT";
    case RunStatus::mismatch:
        return "MISMATCH";
    }
    return "UNKNOWN";
}

RetryRun build_with_retries(const std::function<Morphism(std::uint64_t)>& make, int p_min, int p_max,
                            std::uint64_t seed, int retries, const std::function<bool(const TermTable&)>& accept)
{
    if (retries < 0)
        throw std::invalid_argument("retry count must be non-negative");
    RetryRun run;
    for (int k = 0; k <= retries; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        run.window = build_tate(make(s), p_min, p_max);
        Attempt a{s, term_table(run.window), verify_exactness(run.window), false};
        a.accepted = a.exactness.all_pass() && accept(a.table);
        run.attempts.push_back(std::move(a));
        if (run.attempts.back().accepted)
            return run;
    }
    const auto& first = run.attempts.front().table;
    bool stable = true;
    for (const auto& a : run.attempts)
        stable = stable && a.table == first && a.exactness.all_pass();
    run.status = stable ? RunStatus::mismatch : RunStatus::genericity_suspect;
    return run;
}

} // namespace tate::res
