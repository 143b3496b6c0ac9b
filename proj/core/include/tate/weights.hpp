#pragma once

// GL_n weight combinatorics: Borel-Bott-Weil via the dotted Weyl action, the
// Weyl dimension formula, cohomology of Schur bundles of Omega(1) on
// projective space, and closed-form Tate term predictions.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate::wt {

using Count = std::uint64_t;

/// Integer coordinates in the basis eps_0, ..., eps_{n-1} of characters of
/// the diagonal torus.
struct Weight {
    std::vector<int> coords;

    std::size_t n() const { return coords.size(); }
    /// Weakly decreasing.
    bool is_dominant() const;
    bool operator==(const Weight&) const = default;
};

/// Weakly decreasing non-negative parts; trailing zeros are implicit.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    std::size_t length() const;
    /// Parts padded with zeros (or truncated of zeros) to exactly `len`.
    std::vector<int> padded(std::size_t len) const;

private:
    std::vector<int> parts_;
};

class NonDominant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BbwResult {
    int length;      // the only cohomological degree that is nonzero
    Weight dominant; // highest weight of that cohomology
    Count dim;
};

/// nullopt when lambda + rho has a repeated entry (all cohomology vanishes).
std::optional<BbwResult> bbw(const Weight& lambda);

/// prod_{i<j} (mu_i - mu_j + j - i) / (j - i). Throws NonDominant.
Count weyl_dim(const Weight& mu);

Count binomial(int n, int k);
/// dim S^k of an n-dimensional space (0 for k < 0).
Count sym_power_dim(int n, int k);

struct TermPrediction {
    int p;
    int omega_twist;
    Count rank;
    std::string factors;
};

/// The term at position p of the Tate resolution of a general map
/// omega_E(a) (x) A^* -> omega_E(a-1) (x) B, as printed in the closed form:
/// p >= 2: omega_E(-p) (x) S^{p-2}A (x) S^{p+a}B (x) det A;
/// p = -r < 0: omega_E(a+b+r) (x) S^{b+r-1}A^* (x) S^{r-1}B^* (x) det B^*.
/// Empty when the rank is zero.
std::optional<TermPrediction> predict_general(int dim_a, int dim_b, int p);
/// Same closed form with B = A.
std::optional<TermPrediction> predict_symmetric(int dim_a, int p);
/// Skew maps omega_E(a-1) (x) A^* -> omega_E(a-2) (x) A:
/// p >= 2: omega_E(-p) (x) S_{a+p-2,p-2}A (x) det A;
/// p = -r < 0: omega_E(2a+r-2) (x) S_{a+r-1,r-1}A^* (x) det A^*.
std::optional<TermPrediction> predict_skew(int dim_a, int p);

/// Terms sum_i omega_E(i-p) (x) H^i L(p-i) for L = O(-2, a) (x) det A on the
/// Segre variety P(A) x P(B), computed from Kunneth and bbw on each factor.
std::vector<TermPrediction> segre_bundle_terms(int dim_a, int dim_b, int p);
/// Same for L = (S^a E)(-2) (x) det A^* on the Grassmannian of 2-quotients of
/// A, with H^i L(t) read off from bbw of the induced weight.
std::vector<TermPrediction> grassmannian_bundle_terms(int dim_a, int p);

struct SchurTerm {
    int h;          // number of parts strictly greater than p
    Weight twisted; // (i_1 - 1, ..., i_h - 1, p, i_{h+1}, ..., i_v)
    int omega_twist;
    Count rank;
};

/// Term at position p of the pure Tate resolution of S_i(Omega(1)) on P^v.
/// Requires at most v nonzero parts.
SchurTerm schur_terms(const Partition& part, int v, int p);

struct CohomologyTable {
    int v = 0;
    int p_min = 0;
    int p_max = -1;
    /// values[r][p - p_min] = dim H^r S_i(Omega(1))(p - r).
    std::vector<std::vector<Count>> values;

    Count at(int r, int p) const { return values.at(r).at(p - p_min); }
};

CohomologyTable cohomology_table(const Partition& part, int v, int p_min, int p_max);

} // namespace tate::wt
