#pragma once

// Constructors for the morphisms omega_E(...) (x) A^* -> omega_E(...) (x) B
// studied here: general, symmetric and skew-symmetric linear maps (a natural
// map composed with a seeded random surjection onto V), the truncated Koszul
// map and the symplectic map.

#include "tate/extalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tate::maps {

using ext::Morphism;
using la::Matrix;
using la::PrimeField;

enum class MapKind { general, symmetric, skew, koszul, symplectic };

std::string to_string(MapKind kind);
MapKind parse_map_kind(const std::string& name);

struct MapSpec {
    MapKind kind = MapKind::general;
    int dim_a = 0;
    int dim_b = 0;
    int dim_w = 0;
    std::uint32_t prime = la::kDefaultPrime;
    std::uint64_t seed = 0;
    /// Skip the dimension guards; the closed forms need not hold then.
    bool force = false;
};

class DimensionGuard : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotSurjectivePossible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParityGuard : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws DimensionGuard (or ParityGuard) naming the violated bound.
void check_guards(const MapSpec& spec);

/// Seeded dim_w x dim_source matrix of rank dim_w, resampled until full rank.
Matrix random_surjection(std::size_t dim_source, std::size_t dim_w, std::uint64_t seed, PrimeField field);

/// omega_E(a) (x) A^* -> omega_E(a-1) (x) B, entry (j, i) = sigma(alpha_i (x) beta_j).
Morphism general_map(const MapSpec& spec);
/// omega_E(a) (x) A^* -> omega_E(a-1) (x) A, entry (j, i) = sigma(alpha_i alpha_j).
Morphism symmetric_map(const MapSpec& spec);
/// omega_E(a-1) (x) A^* -> omega_E(a-2) (x) A, entry (j, i) = sigma(alpha_i ^ alpha_j).
Morphism skew_map(const MapSpec& spec);
/// omega_E(1) (x) V -> omega_E(-1) (x) V^*, entry (j, i) = e_j ^ e_i.
Morphism koszul_map(int dim_w, PrimeField field);
/// omega_E(v) -> omega_E, multiplication by s^{v/2} with s = sum e_{2i-1} ^ e_{2i}.
Morphism symplectic_map(int dim_w, PrimeField field);

Morphism make_map(const MapSpec& spec);

} // namespace tate::maps
