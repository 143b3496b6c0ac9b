#pragma once

// The exterior algebra E(V) = sum of the exterior powers of V, graded with V
// in degree -1, together with free graded modules, degree-0 morphisms between
// them, and finite-dimensional graded modules given by slices and actions.
//
// Twist convention: M(s)_d = M_{d+s}. The summand E(s) has its generator in
// degree -s and nonzero slices in degrees [-s - n, -s], n = dim V. The graded
// dual omega_E is isomorphic to E(-n), so omega_E(j) is stored as E(j - n).
//
// A morphism with entry matrix (m_ij) sends x * g_j to sum_i (x * m_ij) * g_i,
// i.e. entries act by right multiplication; this makes it left E-linear
// without any sign bookkeeping.

#include "tate/exactla.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tate::ext {

using la::Matrix;
using la::PrimeField;
using la::Scalar;

/// Subset of {0, ..., n-1} as a bitmask; e_S is the ordered wedge of its
/// elements in increasing order.
using Monomial = std::uint32_t;

inline constexpr int kMaxDimV = 16;

inline int monomial_size(Monomial s)
{
    return std::popcount(s);
}

/// Sign of e_S * e_T for disjoint S, T: (-1)^{#{(s, t) : s > t}}.
int product_sign(Monomial s, Monomial t);

/// Colex-ordered basis monomials of each exterior power of an n-dim space.
class MonomialBasis {
public:
    static const MonomialBasis& get(int dim_v);

    int dim_v() const { return dim_v_; }
    const std::vector<Monomial>& of_size(int k) const;
    std::size_t count(int k) const { return of_size(k).size(); }
    std::size_t index(Monomial m) const { return index_[m]; }

private:
    MonomialBasis() = default;
    explicit MonomialBasis(int dim_v);
    friend struct MonomialTables;

    int dim_v_ = 0;
    std::vector<std::vector<Monomial>> by_size_;
    std::vector<std::uint32_t> index_;
};

/// Monomials spanning E_d = wedge^{-d} V; empty when -d is outside [0, dimV].
std::vector<Monomial> basis_of_degree(int dim_v, int d);

class ExtElement {
public:
    using Term = std::pair<Monomial, Scalar>;

    ExtElement(int dim_v, PrimeField field);

    static ExtElement monomial(int dim_v, PrimeField field, Monomial m, Scalar coeff = 1);
    /// The element sum_k coords[k] e_k of V.
    static ExtElement linear_form(int dim_v, PrimeField field, const std::vector<Scalar>& coords);

    int dim_v() const { return dim_v_; }
    const PrimeField& field() const { return field_; }
    /// Nonzero terms, sorted by monomial.
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Degree (= -size of its monomials) when nonzero and homogeneous.
    std::optional<int> degree() const;
    Scalar coefficient(Monomial m) const;

    ExtElement& add_term(Monomial m, Scalar coeff);
    ExtElement scaled(Scalar c) const;

    friend ExtElement operator+(const ExtElement& x, const ExtElement& y);
    friend ExtElement operator-(const ExtElement& x, const ExtElement& y);
    bool operator==(const ExtElement&) const = default;

private:
    int dim_v_;
    PrimeField field_;
    std::vector<Term> terms_;
};

ExtElement wedge_mul(const ExtElement& x, const ExtElement& y);

class FreeGradedModule {
public:
    FreeGradedModule() = default;
    /// Summands E(s_j), one per entry of `twists`.
    FreeGradedModule(int dim_v, std::vector<int> twists);
    /// Summands omega_E(j), one per entry of `omega_twists`.
    static FreeGradedModule from_omega(int dim_v, const std::vector<int>& omega_twists);

    int dim_v() const { return dim_v_; }
    std::size_t rank() const { return twists_.size(); }
    const std::vector<int>& twists() const { return twists_; }
    int twist(std::size_t j) const { return twists_[j]; }
    int omega_twist(std::size_t j) const { return twists_[j] + dim_v_; }
    std::vector<int> omega_twists() const;
    int generator_degree(std::size_t j) const { return -twists_[j]; }

    /// Lowest and highest degrees with a nonzero slice; lowest > highest when
    /// the module is zero.
    int lowest_degree() const;
    int highest_degree() const;

    std::size_t slice_dim(int d) const;
    /// Size of the monomials of generator j's block in degree d, or -1.
    int block_size(std::size_t j, int d) const;
    /// Start of generator j's block inside the degree-d slice.
    std::size_t block_offset(std::size_t j, int d) const;
    /// Coordinate of e_S * g_j in the degree-d slice (d determined by |S|).
    std::size_t coordinate(std::size_t j, Monomial s) const;

    /// Matrix of left multiplication by e_k, slice d -> slice d-1.
    Matrix action(PrimeField field, int k, int d) const;
    /// e_k applied to each column of `cols` (vectors in slice d).
    Matrix apply_action(int k, int d, const Matrix& cols) const;

    bool operator==(const FreeGradedModule&) const = default;

private:
    int dim_v_ = 0;
    std::vector<int> twists_;
};

/// Direct sum of two free modules (generators of `a` first).
FreeGradedModule direct_sum(const FreeGradedModule& a, const FreeGradedModule& b);

class HomogeneityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Morphism {
public:
    /// `entries` is row-major: target generators are rows, source
    /// generators are columns. Throws HomogeneityError when an entry does not
    /// have the degree forced by the twists.
    Morphism(FreeGradedModule source, FreeGradedModule target, std::vector<ExtElement> entries);
    static Morphism zero(FreeGradedModule source, FreeGradedModule target, PrimeField field);

    const FreeGradedModule& source() const { return source_; }
    const FreeGradedModule& target() const { return target_; }
    const PrimeField& field() const { return field_; }
    const ExtElement& entry(std::size_t i, std::size_t j) const { return entries_[i * source_.rank() + j]; }
    ExtElement& entry(std::size_t i, std::size_t j) { return entries_[i * source_.rank() + j]; }
    /// Degree an entry (i, j) must have: t_i - s_j.
    int entry_degree(std::size_t i, std::size_t j) const { return target_.twist(i) - source_.twist(j); }

    /// Scalar matrix of the restriction to degree-d slices; rows and columns
    /// are ordered by (generator, colex monomial).
    Matrix degree_matrix(int d) const;
    /// No nonzero entry of degree 0.
    bool is_minimal() const;
    bool is_zero() const;

private:
    FreeGradedModule source_;
    FreeGradedModule target_;
    PrimeField field_;
    std::vector<ExtElement> entries_;
};

inline Matrix morphism_degree_matrix(const Morphism& phi, int d)
{
    return phi.degree_matrix(d);
}

/// second o first.
Morphism compose(const Morphism& first, const Morphism& second);

/// The k-dual morphism target^* -> source^*, with E(s)^* identified with
/// E(-s-n). Contravariant: dual(compose(f, g)) == compose(dual(g), dual(f)),
/// and dual(dual(phi)) == phi.
Morphism dual_morphism(const Morphism& phi);

/// Finite-dimensional graded left E-module: slices M_d for d in
/// [lowest, highest] and, for each basis vector e_k of V, the action
/// M_d -> M_{d-1}. Optionally remembers an echelon basis of each slice inside
/// an ambient free module.
class GradedModule {
public:
    struct Slice {
        std::size_t dim = 0;
        /// action[k] has shape dim(d-1) x dim(d).
        std::vector<Matrix> action;
    };
    struct Embedding {
        FreeGradedModule ambient;
        /// One entry per slice: echelon basis in the ambient slice.
        std::vector<la::Kernel> basis;
    };

    GradedModule(int dim_v, PrimeField field);
    GradedModule(int dim_v, PrimeField field, int lowest, std::vector<Slice> slices);

    int dim_v() const { return dim_v_; }
    const PrimeField& field() const { return field_; }
    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(slices_.size()) - 1; }
    bool in_range(int d) const { return d >= lowest_ && d <= highest_degree(); }

    std::size_t slice_dim(int d) const { return in_range(d) ? slices_[d - lowest_].dim : 0; }
    /// e_k : M_d -> M_{d-1}; a correctly shaped zero matrix outside the range.
    Matrix action(int k, int d) const;
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    /// Nonzero slice dimensions by degree.
    std::map<int, std::size_t> hilbert_function() const;

    /// act_j act_k = -act_k act_j and act_k act_k = 0 on every slice.
    bool satisfies_relations() const;

    const std::optional<Embedding>& embedding() const { return embedding_; }
    void set_embedding(Embedding e);
    /// Ambient coordinates of vectors (columns) of slice d.
    Matrix to_ambient(int d, const Matrix& coords) const;

    /// The image of e_S applied to the columns of `cols` (vectors in M_d);
    /// result lives in M_{d-|S|}.
    Matrix apply_monomial(Monomial s, int d, const Matrix& cols) const;

private:
    int dim_v_;
    PrimeField field_;
    int lowest_ = 0;
    std::vector<Slice> slices_;
    std::optional<Embedding> embedding_;
};

/// F viewed as a graded module, embedded in itself.
GradedModule free_module(const FreeGradedModule& f, PrimeField field);

/// The submodule of F spanned degreewise by the given echelon bases
/// (indexed from degree `lowest`). The spans must be closed under the action.
GradedModule submodule(const FreeGradedModule& f, PrimeField field, int lowest, std::vector<la::Kernel> bases);

GradedModule image_module(const Morphism& phi);
GradedModule kernel_module(const Morphism& phi);

/// (M^*)_d = (M_{-d})^*, with e_k acting by (-1)^d times the transpose.
GradedModule dual_module(const GradedModule& m);

} // namespace tate::ext
