#include "tate/extalg.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace tate::ext {

int product_sign(Monomial s, Monomial t)
{
    int swaps = 0;
    while (t != 0) {
        const int low = std::countr_zero(t);
        t &= t - 1;
        // Elements of s greater than `low` must move past it.
        const Monomial above = low >= 31 ? 0u : (s >> (low + 1));
        swaps += std::popcount(above);
    }
    return (swaps & 1) ? -1 : 1;
}

MonomialBasis::MonomialBasis(int dim_v) : dim_v_(dim_v), by_size_(dim_v + 1), index_(std::size_t{1} << dim_v)
{
    // Increasing bitmask order within a fixed size is the colex order.
    for (Monomial m = 0; m < (Monomial{1} << dim_v); ++m) {
        auto& bucket = by_size_[std::popcount(m)];
        index_[m] = static_cast<std::uint32_t>(bucket.size());
        bucket.push_back(m);
    }
}

struct MonomialTables {
    std::vector<MonomialBasis> tables;
    MonomialTables()
    {
        for (int n = 0; n <= kMaxDimV; ++n)
            tables.push_back(MonomialBasis(n));
    }
};

const MonomialBasis& MonomialBasis::get(int dim_v)
{
    if (dim_v < 0 || dim_v > kMaxDimV)
        throw std::out_of_range("dim V must lie in [0, " + std::to_string(kMaxDimV) + "]");
    static const MonomialTables all;
    return all.tables[dim_v];
}

const std::vector<Monomial>& MonomialBasis::of_size(int k) const
{
    static const std::vector<Monomial> empty;
    if (k < 0 || k > dim_v_)
        return empty;
    return by_size_[k];
}

std::vector<Monomial> basis_of_degree(int dim_v, int d)
{
    return MonomialBasis::get(dim_v).of_size(-d);
}

// ExtElement

ExtElement::ExtElement(int dim_v, PrimeField field) : dim_v_(dim_v), field_(field)
{
    if (dim_v < 0 || dim_v > kMaxDimV)
        throw std::out_of_range("dim V out of range");
}

ExtElement ExtElement::monomial(int dim_v, PrimeField field, Monomial m, Scalar coeff)
{
    ExtElement x(dim_v, field);
    x.add_term(m, coeff);
    return x;
}

ExtElement ExtElement::linear_form(int dim_v, PrimeField field, const std::vector<Scalar>& coords)
{
    if (coords.size() != static_cast<std::size_t>(dim_v))
        throw la::DimensionMismatch("linear_form: expected dim V coordinates");
    ExtElement x(dim_v, field);
    for (int k = 0; k < dim_v; ++k)
        x.add_term(Monomial{1} << k, coords[k]);
    return x;
}

bool ExtElement::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int k = monomial_size(terms_.front().first);
    return std::all_of(terms_.begin(), terms_.end(), [k](const Term& t) { return monomial_size(t.first) == k; });
}

std::optional<int> ExtElement::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return -monomial_size(terms_.front().first);
}

Scalar ExtElement::coefficient(Monomial m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : 0;
}

ExtElement& ExtElement::add_term(Monomial m, Scalar coeff)
{
    if (dim_v_ < 32 && (m >> dim_v_) != 0)
        throw std::out_of_range("monomial uses a basis vector outside V");
    coeff %= field_.prime();
    if (coeff == 0)
        return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        it->second = field_.add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, {m, coeff});
    }
    return *this;
}

ExtElement ExtElement::scaled(Scalar c) const
{
    ExtElement out(dim_v_, field_);
    c %= field_.prime();
    if (c == 0)
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.second = field_.mul(t.second, c);
    return out;
}

ExtElement operator+(const ExtElement& x, const ExtElement& y)
{
    if (x.dim_v_ != y.dim_v_ || !(x.field_ == y.field_))
        throw la::DimensionMismatch("ExtElement sum: incompatible operands");
    ExtElement out = x;
    for (const auto& [m, c] : y.terms_)
        out.add_term(m, c);
    return out;
}

ExtElement operator-(const ExtElement& x, const ExtElement& y)
{
    return x + y.scaled(y.field_.neg(1));
}

ExtElement wedge_mul(const ExtElement& x, const ExtElement& y)
{
    if (x.dim_v() != y.dim_v() || !(x.field() == y.field()))
        throw la::DimensionMismatch("wedge_mul: operands live in different exterior algebras");
    const PrimeField& f = x.field();
    std::vector<ExtElement::Term> raw;
    for (const auto& [s, a] : x.terms())
        for (const auto& [t, b] : y.terms()) {
            if ((s & t) != 0)
                continue;
            Scalar c = f.mul(a, b);
            if (product_sign(s, t) < 0)
                c = f.neg(c);
            raw.emplace_back(s | t, c);
        }
    std::sort(raw.begin(), raw.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    ExtElement out(x.dim_v(), f);
    for (const auto& [m, c] : raw)
        out.add_term(m, c);
    return out;
}

// FreeGradedModule

FreeGradedModule::FreeGradedModule(int dim_v, std::vector<int> twists) : dim_v_(dim_v), twists_(std::move(twists))
{
    MonomialBasis::get(dim_v); // range check
}

FreeGradedModule FreeGradedModule::from_omega(int dim_v, const std::vector<int>& omega_twists)
{
    std::vector<int> twists;
    twists.reserve(omega_twists.size());
    for (int j : omega_twists)
        twists.push_back(j - dim_v);
    return FreeGradedModule(dim_v, std::move(twists));
}

std::vector<int> FreeGradedModule::omega_twists() const
{
    std::vector<int> out;
    out.reserve(twists_.size());
    for (int s : twists_)
        out.push_back(s + dim_v_);
    return out;
}

int FreeGradedModule::lowest_degree() const
{
    int lo = INT_MAX;
    for (int s : twists_)
        lo = std::min(lo, -s - dim_v_);
    return twists_.empty() ? 1 : lo;
}

int FreeGradedModule::highest_degree() const
{
    int hi = INT_MIN;
    for (int s : twists_)
        hi = std::max(hi, -s);
    return twists_.empty() ? 0 : hi;
}

int FreeGradedModule::block_size(std::size_t j, int d) const
{
    const int k = -(d + twists_[j]);
    return (k < 0 || k > dim_v_) ? -1 : k;
}

std::size_t FreeGradedModule::block_offset(std::size_t j, int d) const
{
    const auto& basis = MonomialBasis::get(dim_v_);
    std::size_t off = 0;
    for (std::size_t i = 0; i < j; ++i) {
        const int k = block_size(i, d);
        if (k >= 0)
            off += basis.count(k);
    }
    return off;
}

std::size_t FreeGradedModule::slice_dim(int d) const
{
    return block_offset(twists_.size(), d);
}

std::size_t FreeGradedModule::coordinate(std::size_t j, Monomial s) const
{
    const int d = -monomial_size(s) - twists_[j];
    return block_offset(j, d) + MonomialBasis::get(dim_v_).index(s);
}

Matrix FreeGradedModule::action(PrimeField field, int k, int d) const
{
    const std::size_t n = slice_dim(d);
    Matrix id(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = 1;
    return apply_action(k, d, id);
}

Matrix FreeGradedModule::apply_action(int k, int d, const Matrix& cols) const
{
    const PrimeField field = cols.field();
    const auto& basis = MonomialBasis::get(dim_v_);
    const Monomial ek = Monomial{1} << k;
    Matrix out(field, slice_dim(d - 1), cols.cols());
    std::size_t src_off = 0;
    std::size_t dst_off = 0;
    for (std::size_t j = 0; j < twists_.size(); ++j) {
        const int size = block_size(j, d);
        const int next_size = block_size(j, d - 1);
        const std::size_t count = size >= 0 ? basis.count(size) : 0;
        if (size >= 0 && next_size >= 0) {
            const auto& monos = basis.of_size(size);
            for (std::size_t i = 0; i < count; ++i) {
                const Monomial s = monos[i];
                if (s & ek)
                    continue;
                const bool negative = product_sign(ek, s) < 0;
                const std::size_t target = dst_off + basis.index(s | ek);
                const Scalar* src = cols.row(src_off + i);
                Scalar* dst = out.row(target);
                for (std::size_t c = 0; c < cols.cols(); ++c)
                    dst[c] = negative ? field.neg(src[c]) : src[c];
            }
        }
        src_off += count;
        if (next_size >= 0)
            dst_off += basis.count(next_size);
    }
    return out;
}

FreeGradedModule direct_sum(const FreeGradedModule& a, const FreeGradedModule& b)
{
    if (a.dim_v() != b.dim_v())
        throw la::DimensionMismatch("direct_sum: different exterior algebras");
    std::vector<int> twists = a.twists();
    twists.insert(twists.end(), b.twists().begin(), b.twists().end());
    return FreeGradedModule(a.dim_v(), std::move(twists));
}

// Morphism

Morphism::Morphism(FreeGradedModule source, FreeGradedModule target, std::vector<ExtElement> entries)
    : source_(std::move(source)), target_(std::move(target)),
      field_(entries.empty() ? PrimeField{} : entries.front().field()), entries_(std::move(entries))
{
    if (source_.dim_v() != target_.dim_v())
        throw la::DimensionMismatch("Morphism: source and target over different algebras");
    if (entries_.size() != source_.rank() * target_.rank())
        throw la::DimensionMismatch("Morphism: entry count does not match ranks");
    for (std::size_t i = 0; i < target_.rank(); ++i)
        for (std::size_t j = 0; j < source_.rank(); ++j) {
            const ExtElement& e = entry(i, j);
            if (e.dim_v() != source_.dim_v() || !(e.field() == field_))
                throw la::DimensionMismatch("Morphism: entry from a different algebra");
            if (e.is_zero())
                continue;
            const auto deg = e.degree();
            if (!deg || *deg != entry_degree(i, j))
                throw HomogeneityError("Morphism: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is not homogeneous of degree " + std::to_string(entry_degree(i, j)));
        }
}

Morphism Morphism::zero(FreeGradedModule source, FreeGradedModule target, PrimeField field)
{
    std::vector<ExtElement> entries(source.rank() * target.rank(), ExtElement(source.dim_v(), field));
    Morphism m(std::move(source), std::move(target), std::move(entries));
    m.field_ = field;
    return m;
}

Matrix Morphism::degree_matrix(int d) const
{
    const auto& basis = MonomialBasis::get(source_.dim_v());
    Matrix out(field_, target_.slice_dim(d), source_.slice_dim(d));
    std::vector<std::size_t> target_offsets(target_.rank());
    for (std::size_t i = 0; i < target_.rank(); ++i)
        target_offsets[i] = target_.block_offset(i, d);

    std::size_t col = 0;
    for (std::size_t j = 0; j < source_.rank(); ++j) {
        const int size = source_.block_size(j, d);
        if (size < 0)
            continue;
        for (Monomial s : basis.of_size(size)) {
            for (std::size_t i = 0; i < target_.rank(); ++i) {
                if (target_.block_size(i, d) < 0)
                    continue;
                for (const auto& [u, c] : entry(i, j).terms()) {
                    if ((s & u) != 0)
                        continue;
                    Scalar v = product_sign(s, u) < 0 ? field_.neg(c) : c;
                    Scalar& slot = out(target_offsets[i] + basis.index(s | u), col);
                    slot = field_.add(slot, v);
                }
            }
            ++col;
        }
    }
    return out;
}

bool Morphism::is_minimal() const
{
    for (std::size_t i = 0; i < target_.rank(); ++i)
        for (std::size_t j = 0; j < source_.rank(); ++j)
            if (!entry(i, j).is_zero() && entry_degree(i, j) == 0)
                return false;
    return true;
}

bool Morphism::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const ExtElement& e) { return e.is_zero(); });
}

Morphism compose(const Morphism& first, const Morphism& second)
{
    if (!(first.target() == second.source()))
        throw la::DimensionMismatch("compose: target of the first map is not the source of the second");
    const PrimeField field = first.field();
    const int n = first.source().dim_v();
    std::vector<ExtElement> entries;
    entries.reserve(second.target().rank() * first.source().rank());
    for (std::size_t k = 0; k < second.target().rank(); ++k)
        for (std::size_t j = 0; j < first.source().rank(); ++j) {
            ExtElement acc(n, field);
            // x g_j -> x m_ij g_i -> x m_ij n_ki h_k
            for (std::size_t i = 0; i < first.target().rank(); ++i)
                acc = acc + wedge_mul(first.entry(i, j), second.entry(k, i));
            entries.push_back(std::move(acc));
        }
    if (entries.empty())
        return Morphism::zero(first.source(), second.target(), field);
    return Morphism(first.source(), second.target(), std::move(entries));
}

Morphism dual_morphism(const Morphism& phi)
{
    const int n = phi.source().dim_v();
    std::vector<int> src, tgt;
    for (int t : phi.target().twists())
        src.push_back(-t - n);
    for (int s : phi.source().twists())
        tgt.push_back(-s - n);
    FreeGradedModule source(n, src), target(n, tgt);
    std::vector<ExtElement> entries;
    // Entries go through the reversal x_1...x_k -> x_k...x_1, an
    // anti-automorphism, so dual(g o f) = dual(f) o dual(g).
    for (std::size_t j = 0; j < phi.source().rank(); ++j)
        for (std::size_t i = 0; i < phi.target().rank(); ++i) {
            ExtElement x(n, phi.field());
            for (const auto& [m, c] : phi.entry(i, j).terms()) {
                const int k = monomial_size(m);
                x.add_term(m, (k * (k - 1) / 2) % 2 ? phi.field().neg(c) : c);
            }
            entries.push_back(std::move(x));
        }
    if (entries.empty())
        return Morphism::zero(source, target, phi.field());
    return Morphism(source, target, std::move(entries));
}

// GradedModule

GradedModule::GradedModule(int dim_v, PrimeField field) : dim_v_(dim_v), field_(field) {}

GradedModule::GradedModule(int dim_v, PrimeField field, int lowest, std::vector<Slice> slices)
    : dim_v_(dim_v), field_(field), lowest_(lowest), slices_(std::move(slices))
{
    // Trim zero slices at both ends so the range is tight.
    while (!slices_.empty() && slices_.back().dim == 0)
        slices_.pop_back();
    std::size_t skip = 0;
    while (skip < slices_.size() && slices_[skip].dim == 0)
        ++skip;
    if (skip > 0) {
        slices_.erase(slices_.begin(), slices_.begin() + static_cast<std::ptrdiff_t>(skip));
        lowest_ += static_cast<int>(skip);
    }
    for (std::size_t i = 0; i < slices_.size(); ++i) {
        auto& s = slices_[i];
        const int d = lowest_ + static_cast<int>(i);
        const std::size_t below = (i == 0) ? 0 : slices_[i - 1].dim;
        if (s.action.empty())
            s.action.assign(dim_v, Matrix(field, below, s.dim));
        if (s.action.size() != static_cast<std::size_t>(dim_v))
            throw la::DimensionMismatch("GradedModule: need one action matrix per basis vector");
        for (auto& a : s.action) {
            // Nothing lives below the lowest slice.
            if (i == 0)
                a = Matrix(field, 0, s.dim);
            if (a.rows() != below || a.cols() != s.dim)
                throw la::DimensionMismatch("GradedModule: action at degree " + std::to_string(d) + " has wrong shape");
        }
    }
}

Matrix GradedModule::action(int k, int d) const
{
    if (!in_range(d))
        return Matrix(field_, slice_dim(d - 1), 0);
    return slices_[d - lowest_].action[k];
}

std::size_t GradedModule::total_dim() const
{
    std::size_t total = 0;
    for (const auto& s : slices_)
        total += s.dim;
    return total;
}

std::map<int, std::size_t> GradedModule::hilbert_function() const
{
    std::map<int, std::size_t> out;
    for (std::size_t i = 0; i < slices_.size(); ++i)
        if (slices_[i].dim > 0)
            out[lowest_ + static_cast<int>(i)] = slices_[i].dim;
    return out;
}

bool GradedModule::satisfies_relations() const
{
    for (int d = lowest_ + 1; d <= highest_degree(); ++d)
        for (int j = 0; j < dim_v_; ++j)
            for (int k = j; k < dim_v_; ++k) {
                const Matrix jk = action(j, d - 1) * action(k, d);
                const Matrix kj = action(k, d - 1) * action(j, d);
                if (!(jk + kj).is_zero())
                    return false;
            }
    return true;
}

void GradedModule::set_embedding(Embedding e)
{
    if (e.basis.size() != slices_.size())
        throw la::DimensionMismatch("set_embedding: one basis per slice required");
    embedding_ = std::move(e);
}

Matrix GradedModule::to_ambient(int d, const Matrix& coords) const
{
    if (!embedding_)
        throw std::logic_error("to_ambient: module has no embedding");
    if (!in_range(d))
        return Matrix(field_, embedding_->ambient.slice_dim(d), coords.cols());
    return embedding_->basis[d - lowest_].basis * coords;
}

Matrix GradedModule::apply_monomial(Monomial s, int d, const Matrix& cols) const
{
    // e_S = e_{s1} ... e_{sk} with s1 < ... < sk acts innermost-last.
    Matrix cur = cols;
    int deg = d;
    for (int k = dim_v_ - 1; k >= 0; --k)
        if (s & (Monomial{1} << k)) {
            cur = action(k, deg) * cur;
            --deg;
        }
    return cur;
}

GradedModule free_module(const FreeGradedModule& f, PrimeField field)
{
    const int lo = f.lowest_degree();
    const int hi = f.highest_degree();
    std::vector<la::Kernel> bases;
    for (int d = lo; d <= hi; ++d) {
        const std::size_t n = f.slice_dim(d);
        std::vector<std::size_t> rows(n);
        for (std::size_t i = 0; i < n; ++i)
            rows[i] = i;
        bases.push_back({Matrix::identity(field, n), std::move(rows)});
    }
    return submodule(f, field, lo, std::move(bases));
}

GradedModule submodule(const FreeGradedModule& f, PrimeField field, int lowest, std::vector<la::Kernel> bases)
{
    const int n = f.dim_v();
    std::vector<GradedModule::Slice> slices(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        const int d = lowest + static_cast<int>(i);
        slices[i].dim = bases[i].basis.cols();
        slices[i].action.reserve(n);
        for (int k = 0; k < n; ++k) {
            if (i == 0) {
                slices[i].action.emplace_back(field, 0, slices[i].dim);
                continue;
            }
            Matrix moved = f.apply_action(k, d, bases[i].basis);
            slices[i].action.push_back(moved.select_rows(bases[i - 1].coordinate_rows));
        }
    }
    // Keep the bases aligned with the slices after trimming.
    std::size_t first = 0;
    while (first < slices.size() && slices[first].dim == 0)
        ++first;
    std::size_t last = slices.size();
    while (last > first && slices[last - 1].dim == 0)
        --last;
    GradedModule m(n, field, lowest, slices);
    std::vector<la::Kernel> kept(std::make_move_iterator(bases.begin() + static_cast<std::ptrdiff_t>(first)),
                                 std::make_move_iterator(bases.begin() + static_cast<std::ptrdiff_t>(last)));
    m.set_embedding({f, std::move(kept)});
    return m;
}

GradedModule image_module(const Morphism& phi)
{
    const auto& tgt = phi.target();
    const int lo = tgt.lowest_degree();
    const int hi = tgt.highest_degree();
    std::vector<la::Kernel> bases;
    for (int d = lo; d <= hi; ++d)
        bases.push_back(la::column_space(phi.degree_matrix(d)));
    return submodule(tgt, phi.field(), lo, std::move(bases));
}

GradedModule kernel_module(const Morphism& phi)
{
    const auto& src = phi.source();
    const int lo = src.lowest_degree();
    const int hi = src.highest_degree();
    std::vector<la::Kernel> bases;
    for (int d = lo; d <= hi; ++d)
        bases.push_back(la::kernel(phi.degree_matrix(d)));
    return submodule(src, phi.field(), lo, std::move(bases));
}

GradedModule dual_module(const GradedModule& m)
{
    const PrimeField field = m.field();
    if (m.is_zero())
        return GradedModule(m.dim_v(), field);
    const int lo = -m.highest_degree();
    const int hi = -m.lowest_degree();
    std::vector<GradedModule::Slice> slices;
    for (int d = lo; d <= hi; ++d) {
        GradedModule::Slice s;
        s.dim = m.slice_dim(-d);
        for (int k = 0; k < m.dim_v(); ++k) {
            // (M^*)_d -> (M^*)_{d-1} is dual to M_{-d+1} -> M_{-d}.
            Matrix t = m.action(k, -d + 1).transpose();
            if (d == lo)
                t = Matrix(field, 0, s.dim);
            else if (d % 2 != 0)
                t = Matrix(field, t.rows(), t.cols()) - t;
            s.action.push_back(std::move(t));
        }
        slices.push_back(std::move(s));
    }
    return GradedModule(m.dim_v(), field, lo, std::move(slices));
}

} // namespace tate::ext
