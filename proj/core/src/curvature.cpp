#include "solvmcf/curvature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace solvmcf {

namespace {

std::vector<Vec> orthonormal_tangent(const LieAlgebra& A, const Subalgebra& K) {
  std::vector<Vec> out;
  for (const Vec& b : K.basis) {
    Vec w = b;
    for (const Vec& q : out) w -= A.inner(q, w) * q;
    double n = A.norm(w);
    if (n <= kRankTolerance) throw std::invalid_argument("curvature: degenerate tangent basis");
    out.push_back(w / n);
  }
  return out;
}

}  // namespace

Vec unit_normal(const LieAlgebra& A, const Subalgebra& K) {
  const int d = A.dim();
  if (K.codim() != 1) throw std::invalid_argument("unit_normal: K must have codimension one");

  // metric-orthogonal complement: kernel of B^T G
  Mat b(d, static_cast<int>(K.basis.size()));
  for (int j = 0; j < b.cols(); ++j) b.col(j) = K.basis[j];
  Mat btg = b.transpose() * A.metric();
  Eigen::JacobiSVD<Mat> svd(btg, Eigen::ComputeFullV);
  Vec n = svd.matrixV().col(d - 1);
  n /= A.norm(n);

  if (K.canonical_normal.size() == d) {
    if (A.inner(n, K.canonical_normal) < 0.0) n = -n;
  } else {
    int last = d - 1;
    while (last >= 0 && std::abs(n[last]) <= 1e-9) --last;
    if (last >= 0 && n[last] < 0.0) n = -n;
  }
  return n;
}

double mean_curvature_trace(const LieAlgebra& A, const Subalgebra& K) {
  return -A.ad_matrix(unit_normal(A, K)).trace();
}

double mean_curvature_direct(const LieAlgebra& A, const Subalgebra& K) {
  const Vec nu = unit_normal(A, K);
  double h = 0.0;
  for (const Vec& x : orthonormal_tangent(A, K)) h -= A.inner(nu, A.nabla(x, x));
  return h;
}

Mat shape_operator(const LieAlgebra& A, const Subalgebra& K) {
  const Vec nu = unit_normal(A, K);
  const auto xs = orthonormal_tangent(A, K);
  const int k = static_cast<int>(xs.size());
  Mat s(k, k);
  for (int i = 0; i < k; ++i) {
    Vec dn = A.nabla(xs[i], nu);
    for (int j = 0; j < k; ++j) s(j, i) = A.inner(dn, xs[j]);
  }
  return s;
}

ExtrinsicData extrinsic_data(const LieAlgebra& A, const Subalgebra& K) {
  ExtrinsicData d;
  d.normal = unit_normal(A, K);
  d.shape = shape_operator(A, K);
  d.H = d.shape.trace();
  const auto xs = orthonormal_tangent(A, K);
  d.basis_used = Mat(A.dim(), static_cast<int>(xs.size()));
  for (int j = 0; j < d.basis_used.cols(); ++j) d.basis_used.col(j) = xs[j];
  return d;
}

double paper_mean_curvature(const LieAlgebra& A, const Subalgebra& K) {
  const std::string& key = A.key();
  const std::string& tag = K.family_tag;
  const auto& ap = A.params();
  const auto& fp = K.params;

  if (key == "h3" || key == "sl2" || key == "su2") return 0.0;
  if (key == "r3[l]") {
    const double l = ap[0];
    if (tag == "K0") return -2.0 * l;
    if (tag == "Ka") {
      const double a = fp[0];
      return -2.0 * a * l / std::sqrt(1.0 + a * a);
    }
  } else if (key == "r3[l1,l2]") {
    const double l1 = ap[0], l2 = ap[1];
    if (tag == "K0") return -(l1 + l2);
    if (tag == "K1b") {
      const double b = fp[0];
      return -(l1 + l2) * b / std::sqrt(1.0 + b * b);
    }
    if (tag == "K2a") {
      const double a = fp[0];
      return -(l1 + l2) * a / std::sqrt(1.0 + a * a);
    }
    if (tag == "K3cd") {
      const double c = fp[0], d = fp[1];
      return -2.0 * l1 * d / std::sqrt(1.0 + c * c + d * d);
    }
    if (tag == "K4ef") {
      const double e = fp[0], f = fp[1];
      return -2.0 * l1 * f / std::sqrt(1.0 + e * e + f * f);
    }
  } else if (key == "r3p[l]") {
    if (tag == "K0") return -2.0 * ap[0];
  } else if (key == "g4") {
    if (tag == "G4_H3") return -2.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<CurvatureRow> mean_curvature_table(const LieAlgebra& A, Rng& rng) {
  std::vector<CurvatureRow> rows;
  for (const auto& fam : catalogue_subalgebras(A)) {
    std::vector<double> fp;
    for (size_t i = 0; i < fam.param_names.size(); ++i) fp.push_back(rng.signed_uniform(0.3, 1.8));
    Subalgebra k = fam.make(fp);
    if (k.codim() != 1) continue;
    CurvatureRow row;
    row.algebra_key = A.key();
    row.algebra_params = A.params();
    row.family_tag = k.family_tag;
    row.family_params = k.params;
    row.H_numeric = mean_curvature_trace(A, k);
    row.H_closed_form = paper_mean_curvature(A, k);
    row.abelian = k.is_abelian();
    row.minimal = std::abs(row.H_numeric) < 1e-10;
    if (std::isnan(row.H_closed_form))
      throw std::runtime_error("mean_curvature_table: no closed form for " + k.family_tag);
    if (std::abs(row.H_numeric - row.H_closed_form) > 1e-10)
      throw std::runtime_error("mean_curvature_table: closed-form mismatch for " + k.family_tag);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace solvmcf
