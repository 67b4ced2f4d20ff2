#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solvmcf/group_model.hpp"
#include "solvmcf/subalgebra.hpp"

namespace solvmcf {

struct FlowSolution;

/// A discretized parametrized hypersurface: k = dim-1 chart parameters on a
/// rectangular grid, each node holding group coordinates.
struct SurfacePatch {
  GroupModel model;
  int nu = 0, nv = 0;
  double u0 = -1.0, u1 = 1.0, v0 = -1.0, v1 = 1.0;
  std::vector<Vec> pts;  // row-major, index i*nv + j
  /// Sign applied to the chart's right-handed normal; make_patch copies the
  /// family's canonical alignment so curvatures are signed like the algebra's.
  double orientation = 1.0;
  /// Generating closed form, when the patch was sampled from one; curvature
  /// queries then use its analytic tangents instead of grid differences.
  std::shared_ptr<const FlowSolution> source;
  double source_time = 0.0;

  double hu() const { return (u1 - u0) / (nu - 1); }
  double hv() const { return (v1 - v0) / (nv - 1); }
  double u_at(int i) const { return u0 + i * hu(); }
  double v_at(int j) const { return v0 + j * hv(); }
  const Vec& at(int i, int j) const { return pts[i * nv + j]; }
  Vec& at(int i, int j) { return pts[i * nv + j]; }
  bool interior(int i, int j) const { return i > 0 && i < nu - 1 && j > 0 && j < nv - 1; }
};

/// A closed-form evolving embedding phi(u,v[,w],t) with analytic derivatives.
/// For the 3d models the third chart argument is ignored.
struct FlowSolution {
  std::string id;  // "<family_tag>@<model spec>", "+literal" for paper-literal variants
  GroupModel model;
  std::string family_tag;
  std::vector<double> params;
  bool literal = false;
  std::string formula_note;

  std::function<Vec(double, double, double, double)> phi;
  std::function<Vec(double, double, double, double)> dphi_dt;
  std::function<Vec(double, double, double, double)> dphi_du;
  std::function<Vec(double, double, double, double)> dphi_dv;
  std::function<Vec(double, double, double, double)> dphi_dw;  // k = 3 only

  /// d phi / dc of the ansatz factor c(t) = e^{kappa t} at (node, c); unset
  /// for translators and static families.
  std::function<Vec(double, double, double, double)> dphi_dc;
  double kappa = 0.0;        // catalogue exponent of c(t)
  double kappa_paper = 0.0;  // exponent read literally off the paper's formula

  /// Distance of a group point to the time-t surface, measured along the
  /// family's graph direction.
  std::function<double(const Vec&, double)> graph_residual;

  /// +1/-1: sign aligning the chart's right-handed normal with the family's
  /// canonical normal.
  double cross_sign = 1.0;

  int k() const { return model.dim() - 1; }
};

/// The evolving closed forms: family_tag one of "K0", "Ka", "K1b", "K2a",
/// "K3cd", "K4ef", "G4_H3"; params as in the subalgebra catalogue. With
/// literal = true the paper's printed formula is returned instead of the
/// verified one (they differ where the printed time exponents fail the flow
/// equation; verify_flow reports the literal verdicts).
FlowSolution closed_form_solution(const GroupModel& m, const std::string& family_tag,
                                  const std::vector<double>& params, bool literal = false);

/// First and second fundamental forms at a grid node. One-sided differences
/// are used next to the boundary and flagged; such nodes are excluded from
/// acceptance checks.
struct Forms2D {
  double E, F, G;
  double L, M, N;  // g(nabla_{tau_i} tau_j, nu)
  Vec nu_frame;    // unit normal, frame coefficients
  bool one_sided = false;
};
Forms2D fundamental_forms(const SurfacePatch& patch, int i, int j);

/// Scalar mean curvature at a grid node, sign convention of the ambient
/// shape operator: H = -(G L - 2 F M + E N)/(E G - F^2).
double patch_mean_curvature(const SurfacePatch& patch, int i, int j);

/// Pointwise curvature of a closed-form slice (analytic tangents; coefficient
/// derivatives by small-step central differences).
struct CurvatureSample {
  double H;
  Vec nu_frame;
  double dt_normal;  // g(dphi/dt, nu)
  double gram_det;
};
CurvatureSample solution_curvature(const FlowSolution& sol, double u, double v, double w, double t);

struct FlowVerifyReport {
  std::string id;
  bool literal = false;
  double sup_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  long nodes = 0;
  std::vector<double> times;
};

/// sup over interior grid nodes and times of |g(dphi/dt, nu) + H|.
/// Throws std::invalid_argument on immersion failure at a node.
FlowVerifyReport verify_flow(const FlowSolution& sol, const std::vector<double>& times, double tol,
                             int nu = 41, int nv = 41, double lo = -1.0, double hi = 1.0);

enum class BoundaryMode { PinnedToSolution, Frozen };

struct McfOptions {
  double dt = 1e-4;
  int steps = 100;
  BoundaryMode boundary = BoundaryMode::PinnedToSolution;
  const FlowSolution* pin = nullptr;  // required for PinnedToSolution
  int snapshot_stride = 0;            // 0: keep only the final patch
  double cfl_safety = 0.2;
};

struct McfTrajectory {
  std::vector<double> times;
  std::vector<SurfacePatch> snapshots;
  double final_time = 0.0;
};

/// Explicit normal-velocity stepping p <- p + dt (-H nu) in coordinates.
/// Rejects the run when dt exceeds the curvature-based stability bound and
/// throws std::runtime_error on immersion degeneration. 3d models only.
McfTrajectory integrate_mcf(const SurfacePatch& initial, const McfOptions& opt);

/// Sample a closed-form solution onto a grid at time t.
SurfacePatch make_patch(const FlowSolution& sol, double t, int nu, int nv, double lo = -1.0,
                        double hi = 1.0);

/// sup over interior nodes of the family's graph distance to the time-t slice.
double sup_graph_distance(const SurfacePatch& patch, const FlowSolution& sol, double t);

struct AnsatzReport {
  std::string id;
  double kappa_implied = 0.0;    // from solving the flow equation for cdot at c = 1
  double kappa_catalogue = 0.0;
  double kappa_paper = 0.0;
  double node_spread = 0.0;      // max deviation of the implied kappa across nodes
  bool matches_catalogue = false;
  bool matches_paper_literal = false;
};

/// Substitutes the c(t) ansatz into the flow equation and extracts the
/// implied exponent; exact (kappa 0) for translators and static families.
AnsatzReport ansatz_ode_check(const GroupModel& m, const std::string& family_tag,
                              const std::vector<double>& params);

}  // namespace solvmcf
