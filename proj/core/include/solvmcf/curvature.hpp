#pragma once

#include <string>
#include <vector>

#include "solvmcf/rng.hpp"
#include "solvmcf/subalgebra.hpp"

namespace solvmcf {

/// Extrinsic data of a codimension-one subgroup at the algebra level.
struct ExtrinsicData {
  Vec normal;      // unit, oriented
  Mat shape;       // matrix of X -> tangential part of nabla_X normal
  double H;        // trace of shape
  Mat basis_used;  // columns: orthonormalized tangent basis
};

/// Unit normal to K under the parent metric. The sign matches the family's
/// canonical (paper) normal when one is catalogued; otherwise the last
/// nonzero frame coefficient is made positive.
/// Throws std::invalid_argument unless K has codimension one.
Vec unit_normal(const LieAlgebra& A, const Subalgebra& K);

/// H = -tr ad(normal).
double mean_curvature_trace(const LieAlgebra& A, const Subalgebra& K);
/// H = -sum_i g(normal, nabla_{X_i} X_i) over an orthonormalized tangent
/// basis; agrees with mean_curvature_trace.
double mean_curvature_direct(const LieAlgebra& A, const Subalgebra& K);
/// Shape operator in the orthonormalized tangent basis; symmetric, trace H.
Mat shape_operator(const LieAlgebra& A, const Subalgebra& K);
ExtrinsicData extrinsic_data(const LieAlgebra& A, const Subalgebra& K);

/// The paper's closed-form H for a catalogued family, NaN when the family
/// carries no closed form.
double paper_mean_curvature(const LieAlgebra& A, const Subalgebra& K);

struct CurvatureRow {
  std::string algebra_key;
  std::vector<double> algebra_params;
  std::string family_tag;
  std::vector<double> family_params;
  double H_numeric;
  double H_closed_form;
  bool abelian;
  bool minimal;
};

/// One row per catalogued family of A, with family parameters drawn from rng.
/// Throws std::runtime_error if any |H_numeric - H_closed_form| > 1e-10.
std::vector<CurvatureRow> mean_curvature_table(const LieAlgebra& A, Rng& rng);

}  // namespace solvmcf
