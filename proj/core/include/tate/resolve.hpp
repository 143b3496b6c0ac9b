#pragma once

// Minimal projective covers and injective hulls of finite-dimensional graded
// E-modules, and finite windows of the Tate resolution of a morphism between
// free E-modules.

#include "tate/extalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate::res {

using ext::FreeGradedModule;
using ext::GradedModule;
using ext::Morphism;
using la::Matrix;
using la::PrimeField;

/// Raised when a computed cover is not surjective or a hull map is not
/// injective; either means a bug, never bad input.
class InternalCoverFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimensions of M / E_+ M by degree (only nonzero degrees).
std::map<int, std::size_t> top_of_module(const GradedModule& m);

/// Socle dimensions by degree, read off as the top of the dual.
std::map<int, std::size_t> socle_of_module(const GradedModule& m);

struct Generator {
    int degree;
    std::size_t index; // coordinate in the degree slice of the covered module
};

struct CoverStep {
    FreeGradedModule cover;
    std::vector<Generator> generators;
    /// Degreewise matrices cover_d -> M_d, keyed by degree.
    std::map<int, Matrix> maps;
    /// The kernel, embedded in `cover`.
    GradedModule kernel;
};

CoverStep projective_cover_step(const GradedModule& m);

/// A quotient of a free module together with the projection onto it.
struct Quotient {
    GradedModule module;
    /// Degreewise projections free_d -> C_d, keyed by degree.
    std::map<int, Matrix> projection;
};

/// F / (sum of the column spans of image(d)), where image(d) lives in F_d.
template <class ImageFn>
Quotient quotient_of_free(const FreeGradedModule& f, PrimeField field, ImageFn&& image);

struct HullStep {
    FreeGradedModule hull;
    /// Degreewise embeddings M_d -> hull_d.
    std::map<int, Matrix> embedding;
    Quotient cokernel;
};

/// Built by dualizing, covering the dual, and dualizing back: one
/// omega_E-summand per generator of M^*, i.e. per socle element of M.
HullStep injective_hull_step(const GradedModule& m);

/// Reads the images of the generators of `source` (each a vector in the
/// target slice of that generator's degree) as a matrix of E-elements.
Morphism morphism_from_images(const FreeGradedModule& source, const FreeGradedModule& target, PrimeField field,
                              const std::vector<std::vector<la::Scalar>>& images);

struct TateWindow {
    int p_min = 0;
    int p_max = 1;
    /// modules[p - p_min] is T^p.
    std::vector<FreeGradedModule> modules;
    /// differentials[p - p_min] is d^p : T^p -> T^{p+1}.
    std::vector<Morphism> differentials;

    /// The input morphism sits at positions (0, 1).
    static constexpr int seed_position = 0;

    const FreeGradedModule& term(int p) const { return modules.at(p - p_min); }
    const Morphism& differential(int p) const { return differentials.at(p - p_min); }
};

/// Requires p_min <= 0 < 1 <= p_max.
TateWindow build_tate(const Morphism& phi, int p_min, int p_max);

struct TermEntry {
    int omega_twist;
    std::size_t rank;
    bool operator==(const TermEntry&) const = default;
};

struct TermRow {
    int p;
    /// Ordered by increasing twist; ranks positive.
    std::vector<TermEntry> entries;
    bool operator==(const TermRow&) const = default;
};

struct TermTable {
    std::vector<TermRow> rows;
    /// Entries at position p (empty when the position is absent or zero).
    std::vector<TermEntry> at(int p) const;
    bool operator==(const TermTable&) const = default;
};

TermTable term_table(const TateWindow& window);
/// Twist/rank multiset of a single free module.
std::vector<TermEntry> term_entries(const FreeGradedModule& f);

struct ExactnessEntry {
    int p;
    int degree;
    std::size_t slice_dim;
    std::size_t rank_in;  // rank of d^{p-1} into this slice
    std::size_t rank_out; // rank of d^p out of this slice
    bool exact;
};

struct ExactnessReport {
    bool d_squared_zero = true;
    bool interior_exact = true;
    /// Every differential other than the seed is minimal.
    bool minimal = true;
    bool seed_minimal = true;
    std::vector<int> d_squared_failures; // positions p with d^{p+1} d^p != 0
    std::vector<int> non_minimal;        // positions p with d^p not minimal
    std::vector<ExactnessEntry> ledger;

    bool all_pass() const { return d_squared_zero && interior_exact && minimal; }
};

ExactnessReport verify_exactness(const TateWindow& window);

enum class RunStatus {
    pass,
    /// No attempt was accepted, and the attempts did not all produce the
    /// same exact window.
    genericity_suspect,
    /// Every attempt produced the same table and it is not the expected one;
    /// resampling cannot help.
    mismatch,
};

std::string to_string(RunStatus status);

struct Attempt {
    std::uint64_t seed;
    TermTable table;
    ExactnessReport exactness;
    bool accepted;
};

struct RetryRun {
    RunStatus status = RunStatus::pass;
    std::vector<Attempt> attempts;
    /// Window of the accepted attempt, or of the last one.
    TateWindow window;

    const Attempt& final_attempt() const { return attempts.back(); }
};

/// Builds the window of make(seed), make(seed + 1), ... until `accept` holds
/// for the term table and the exactness checks pass, trying at most
/// 1 + retries seeds.
RetryRun build_with_retries(const std::function<Morphism(std::uint64_t)>& make, int p_min, int p_max,
                            std::uint64_t seed, int retries, const std::function<bool(const TermTable&)>& accept);

// Implementation of the template.

template <class ImageFn>
Quotient quotient_of_free(const FreeGradedModule& f, PrimeField field, ImageFn&& image)
{
    const int n = f.dim_v();
    const int lo = f.lowest_degree();
    const int hi = f.highest_degree();
    Quotient out{GradedModule(n, field), {}};
    if (hi < lo)
        return out;

    // Q_d: rows spanning the annihilator of the image; Q_d restricted to the
    // coordinate columns is the identity, which gives a right inverse.
    std::map<int, la::Kernel> annihilators;
    for (int d = lo; d <= hi; ++d) {
        Matrix img = image(d);
        annihilators.emplace(d, la::kernel(img.transpose()));
        out.projection.emplace(d, annihilators.at(d).basis.transpose());
    }
    std::vector<GradedModule::Slice> slices;
    for (int d = lo; d <= hi; ++d) {
        GradedModule::Slice s;
        const auto& ann = annihilators.at(d);
        s.dim = ann.coordinate_rows.size();
        Matrix lift(field, f.slice_dim(d), s.dim);
        for (std::size_t c = 0; c < s.dim; ++c)
            lift(ann.coordinate_rows[c], c) = 1;
        for (int k = 0; k < n; ++k) {
            if (d == lo) {
                s.action.emplace_back(field, 0, s.dim);
                continue;
            }
            s.action.push_back(out.projection.at(d - 1) * f.apply_action(k, d, lift));
        }
        slices.push_back(std::move(s));
    }
    out.module = GradedModule(n, field, lo, std::move(slices));
    return out;
}

} // namespace tate::res
