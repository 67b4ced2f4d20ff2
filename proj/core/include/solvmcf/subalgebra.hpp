#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "solvmcf/lie_algebra.hpp"
#include "solvmcf/rng.hpp"

namespace solvmcf {

/// An ordered basis of a subalgebra together with its catalogue identity.
/// For codimension-one families the paper's oriented unit normal and the
/// subgroup's coordinate parametrization are carried along.
struct Subalgebra {
  LieAlgebra parent;
  std::vector<Vec> basis;
  std::string family_tag;            // "K0","Ka","K1b","K2a","K3cd","K4ef","SL2_K1","SL2_K2","SL2_K3rho","G4_H3"
  std::vector<double> params;
  Vec canonical_normal;              // unit, paper orientation; size 0 when unspecified
  std::function<Vec(const Vec&)> embed;  // (dim-1)-vector of chart params -> group coordinates

  bool is_abelian(double tol = 1e-10) const;
  /// Lower central series of the subalgebra stops exactly at step two.
  bool is_nilpotent_2step(double tol = 1e-10) const;
  int codim() const { return parent.dim() - static_cast<int>(basis.size()); }
};

/// Norm of [X,Y] projected off span{X,Y} under the parent metric.
/// Throws std::invalid_argument if {X,Y} is not linearly independent.
double closure_defect(const LieAlgebra& A, const Vec& X, const Vec& Y);
/// Same for a general basis (used for the codimension-one 4d subalgebra).
double closure_defect(const LieAlgebra& A, const std::vector<Vec>& basis);

/// A classified family with its parameter slots.
struct SubalgebraFamily {
  std::string tag;
  std::vector<std::string> param_names;
  std::function<Subalgebra(const std::vector<double>&)> make;
  /// Distance of a unit plane normal to the family's set in Gr(2,3)
  /// (Pluecker coordinates of a 2-plane in R^3 reduce to the normal line).
  /// Unset for the 4d algebra.
  std::function<double(const Vec&)> normal_distance;
};

/// The closed-form families of 2d subalgebras (3d subalgebra for g4),
/// branching on the algebra key and parameter regime.
/// Throws std::invalid_argument for unknown keys.
std::vector<SubalgebraFamily> catalogue_subalgebras(const LieAlgebra& A);

/// Convenience: materialize every family at the given parameter value
/// (reused for each slot).
std::vector<Subalgebra> materialize_catalogue(const LieAlgebra& A, double param_value = 1.0);

struct SearchReport {
  long trials = 0;
  long closed_found = 0;    // planes reaching closure defect < 1e-8
  long matched = 0;
  std::vector<Vec> unmatched;            // normals of unmatched closing planes
  std::vector<long> family_hits;         // nearest-family counts, catalogue order
  double max_match_distance = 0.0;
};

/// Classification oracle: random 2-planes, each refined by a projected
/// descent of the closure defect over Gr(2,3); every plane reaching defect
/// < 1e-8 must lie within 1e-6 of a catalogued family. 3d algebras only.
SearchReport random_search_verify(const LieAlgebra& A, long trials, Rng& rng);

/// Chart samples on the subgroup through a catalogued subalgebra
/// (coordinates drawn uniformly in [-range, range]; requires embed).
std::vector<Vec> sample_on_subgroup(const Subalgebra& K, int count, Rng& rng, double range = 2.0);

}  // namespace solvmcf
