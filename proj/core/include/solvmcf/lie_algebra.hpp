#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace solvmcf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Relative singular-value threshold for subspace ranks. Parameters are O(1),
/// so this separates genuine rank drops from roundoff.
inline constexpr double kRankTolerance = 1e-9;

/// Structure-constant Lie algebra together with an inner product on the frame.
///
/// Basis convention: indices 0..dim-1 are the frame vectors, (E1,E2,E3) in
/// dimension three and (E0,E1,E2,E3) for the 4d semidirect-product algebra.
/// Elements are coefficient vectors over that frame. Values are immutable
/// after construction and safe for concurrent reads.
class LieAlgebra {
public:
  /// `structure` holds C[i][j][k] flattened as (i*dim + j)*dim + k, meaning
  /// [E_i, E_j] = sum_k C[i][j][k] E_k. Throws std::invalid_argument unless C
  /// is antisymmetric, Jacobi holds to 1e-12, and the metric is symmetric
  /// positive definite (identity when omitted).
  LieAlgebra(int dim, std::vector<double> structure, Mat metric = Mat());

  int dim() const { return dim_; }
  double structure(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const Mat& metric() const { return metric_; }
  bool metric_is_identity() const { return metric_identity_; }

  /// Catalogue key ("" when constructed ad hoc) and its parameters.
  const std::string& key() const { return key_; }
  const std::vector<double>& params() const { return params_; }

  Vec bracket(const Vec& u, const Vec& v) const;
  /// Matrix of ad(u); column j is bracket(u, E_j).
  Mat ad_matrix(const Vec& u) const;
  /// Transpose of ad(u) with respect to the metric: G^{-1} ad(u)^T G.
  Mat ad_transpose(const Vec& u) const;
  /// Levi-Civita connection of the left-invariant metric (Koszul):
  /// 2 nabla_u v = [u,v] - ad^t(u) v - ad^t(v) u.
  Vec nabla(const Vec& u, const Vec& v) const;

  double inner(const Vec& u, const Vec& v) const;
  double norm(const Vec& u) const;

  /// tr ad(E_i) vanishes for every basis vector.
  bool is_unimodular(double tol = 1e-12) const;
  /// Dimensions of D^0 >= D^1 >= ... ; stops at 0 or at the first repeat.
  std::vector<int> derived_series() const;
  bool is_solvable() const;
  /// sup over basis triples of the cyclic-sum norm.
  double jacobi_residual() const;

private:
  void require_dim(const Vec& v, const char* who) const;

  int dim_;
  std::vector<double> c_;
  Mat metric_;
  Mat metric_inv_;
  bool metric_identity_ = true;
  std::string key_;
  std::vector<double> params_;

  friend LieAlgebra make_algebra(const std::string&, const std::vector<double>&);
};

/// Catalogue lookup by string key:
///   "r3[l]"     params {lambda}                ([E3,E1]=l E1, [E3,E2]=E1+l E2)
///   "r3[l1,l2]" params {lambda1, lambda2}, lambda1 != 0
///   "r3p[l]"    params {lambda}
///   "h3"        Heisenberg (= r3[l] at lambda 0)
///   "sl2", "su2", "g4"  no parameters
/// Throws std::invalid_argument for unknown keys or invalid parameters.
LieAlgebra make_algebra(const std::string& key, const std::vector<double>& params = {});

}  // namespace solvmcf
