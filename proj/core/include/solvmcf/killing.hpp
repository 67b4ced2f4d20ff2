#pragma once

#include <functional>
#include <string>
#include <vector>

#include "solvmcf/group_model.hpp"

namespace solvmcf {

using VectorField = std::function<Vec(const Vec&)>;  // point -> coordinate tangent vector

/// A catalogued Killing generator of a group model, as a closed-form
/// coordinate evaluator.
struct KillingField {
  std::string name;  // "E1t", "E2t", "E3t", "T", "T1", "T2", "T3", "E0t"
  VectorField eval;
};

/// Generator basis of the isometry algebra per family and parameter regime:
/// 3 generators generically, 4 for lambda2 = 0 and for S3', 6 for
/// lambda1 = lambda2, and the 4 right-invariant fields for G4. Regime
/// dispatch compares parameters with tolerance 1e-12.
std::vector<KillingField> killing_basis(const GroupModel& m);

/// Right-invariant field through W at p: frame(p) * Ad(p^{-1}) W, with Ad
/// computed by central finite differences of the conjugation
/// t -> p^{-1} (e + tW) p.
Vec right_invariant_field(const GroupModel& m, const Vec& W, const Vec& p, double h = 1e-5);

/// sup over the sample of |L_V g|(p) in an orthonormal frame, estimated by
/// central finite differences of the metric pullback along the flow of V
/// (explicit Euler with substeps, flow parameter `step`).
/// Throws std::invalid_argument on an empty sample.
double killing_residual(const GroupModel& m, const VectorField& V, const std::vector<Vec>& sample,
                        double step = 1e-5);

}  // namespace solvmcf
