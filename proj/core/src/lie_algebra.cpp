#include "solvmcf/lie_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace solvmcf {

LieAlgebra::LieAlgebra(int dim, std::vector<double> constants, Mat metric)
    : dim_(dim), c_(std::move(constants)) {
  if (dim_ < 1 || dim_ > 4) throw std::invalid_argument("LieAlgebra: dim must be in 1..4");
  if (static_cast<int>(c_.size()) != dim_ * dim_ * dim_)
    throw std::invalid_argument("LieAlgebra: structure array has wrong size");

  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (std::abs(structure(i, j, k) + structure(j, i, k)) > 1e-14)
          throw std::invalid_argument("LieAlgebra: structure constants not antisymmetric");

  if (metric.size() == 0) {
    metric_ = Mat::Identity(dim_, dim_);
    metric_inv_ = metric_;
    metric_identity_ = true;
  } else {
    if (metric.rows() != dim_ || metric.cols() != dim_)
      throw std::invalid_argument("LieAlgebra: metric has wrong shape");
    if ((metric - metric.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("LieAlgebra: metric not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(metric);
    if (es.eigenvalues().minCoeff() <= 0.0)
      throw std::invalid_argument("LieAlgebra: metric not positive definite");
    metric_ = std::move(metric);
    metric_inv_ = metric_.inverse();
    metric_identity_ = (metric_ - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff() < 1e-14;
  }

  if (jacobi_residual() > 1e-12)
    throw std::invalid_argument("LieAlgebra: Jacobi identity violated");
}

void LieAlgebra::require_dim(const Vec& v, const char* who) const {
  if (v.size() != dim_) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  require_dim(u, "bracket");
  require_dim(v, "bracket");
  Vec w = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j] == 0.0) continue;
      const double uv = u[i] * v[j];
      for (int k = 0; k < dim_; ++k) w[k] += uv * structure(i, j, k);
    }
  }
  return w;
}

Mat LieAlgebra::ad_matrix(const Vec& u) const {
  require_dim(u, "ad_matrix");
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int k = 0; k < dim_; ++k) {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += u[i] * structure(i, j, k);
      m(k, j) = s;
    }
  }
  return m;
}

Mat LieAlgebra::ad_transpose(const Vec& u) const {
  Mat ad = ad_matrix(u);
  if (metric_identity_) return ad.transpose();
  return metric_inv_ * ad.transpose() * metric_;
}

Vec LieAlgebra::nabla(const Vec& u, const Vec& v) const {
  require_dim(u, "nabla");
  require_dim(v, "nabla");
  return 0.5 * (bracket(u, v) - ad_transpose(u) * v - ad_transpose(v) * u);
}

double LieAlgebra::inner(const Vec& u, const Vec& v) const {
  require_dim(u, "inner");
  require_dim(v, "inner");
  if (metric_identity_) return u.dot(v);
  return u.dot(metric_ * v);
}

double LieAlgebra::norm(const Vec& u) const { return std::sqrt(std::max(0.0, inner(u, u))); }

bool LieAlgebra::is_unimodular(double tol) const {
  for (int i = 0; i < dim_; ++i) {
    double tr = 0.0;
    for (int k = 0; k < dim_; ++k) tr += structure(i, k, k);
    if (std::abs(tr) > tol) return false;
  }
  return true;
}

std::vector<int> LieAlgebra::derived_series() const {
  std::vector<int> dims;
  Mat basis = Mat::Identity(dim_, dim_);
  int r = dim_;
  dims.push_back(r);
  while (r > 0) {
    const int npairs = r * (r - 1) / 2;
    if (npairs == 0) {
      dims.push_back(0);
      break;
    }
    Mat br(dim_, npairs);
    int col = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) br.col(col++) = bracket(basis.col(i), basis.col(j));
    Eigen::JacobiSVD<Mat> svd(br, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() ? sv[0] * kRankTolerance : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > cut && sv[i] > 0.0) ++rank;
    dims.push_back(rank);
    if (rank == r) break;  // stabilized, not solvable
    r = rank;
    if (rank > 0) basis = svd.matrixU().leftCols(rank);
  }
  return dims;
}

bool LieAlgebra::is_solvable() const { return derived_series().back() == 0; }

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  Mat id = Mat::Identity(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vec s = bracket(bracket(id.col(i), id.col(j)), id.col(k)) +
                bracket(bracket(id.col(j), id.col(k)), id.col(i)) +
                bracket(bracket(id.col(k), id.col(i)), id.col(j));
        worst = std::max(worst, s.cwiseAbs().maxCoeff());
      }
  return worst;
}

namespace {

struct BracketTerm {
  int i, j, k;
  double coeff;  // [E_i, E_j] gains coeff * E_k
};

std::vector<double> build_structure(int dim, const std::vector<BracketTerm>& terms) {
  std::vector<double> c(dim * dim * dim, 0.0);
  for (const auto& t : terms) {
    c[(t.i * dim + t.j) * dim + t.k] += t.coeff;
    c[(t.j * dim + t.i) * dim + t.k] -= t.coeff;
  }
  return c;
}

}  // namespace

LieAlgebra make_algebra(const std::string& key, const std::vector<double>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("make_algebra: key '" + key + "' expects " +
                                  std::to_string(n) + " parameter(s)");
  };

  int dim = 3;
  std::vector<BracketTerm> terms;
  if (key == "r3[l]" || key == "h3") {
    double l = 0.0;
    if (key == "h3") {
      need(0);
    } else {
      need(1);
      l = params[0];
    }
    // [E3,E1] = l E1, [E3,E2] = E1 + l E2
    terms = {{2, 0, 0, l}, {2, 1, 0, 1.0}, {2, 1, 1, l}};
  } else if (key == "r3[l1,l2]") {
    need(2);
    if (std::abs(params[0]) < 1e-15)
      throw std::invalid_argument("make_algebra: r3[l1,l2] requires lambda1 != 0");
    terms = {{2, 0, 0, params[0]}, {2, 1, 1, params[1]}};
  } else if (key == "r3p[l]") {
    need(1);
    if (params[0] < 0.0)
      throw std::invalid_argument("make_algebra: r3p[l] requires lambda >= 0");
    // [E3,E1] = l E1 - E2, [E3,E2] = E1 + l E2
    terms = {{2, 0, 0, params[0]}, {2, 0, 1, -1.0}, {2, 1, 0, 1.0}, {2, 1, 1, params[0]}};
  } else if (key == "sl2") {
    need(0);
    // [E3,E2] = E1, [E1,E3] = 2 E3, [E1,E2] = -2 E2
    terms = {{2, 1, 0, 1.0}, {0, 2, 2, 2.0}, {0, 1, 1, -2.0}};
  } else if (key == "su2") {
    need(0);
    // [E3,E2] = -E1, [E1,E2] = E3, [E1,E3] = -E2
    terms = {{2, 1, 0, -1.0}, {0, 1, 2, 1.0}, {0, 2, 1, -1.0}};
  } else if (key == "g4") {
    need(0);
    dim = 4;
    // basis (E0,E1,E2,E3): [E0,E1] = E1/2, [E0,E2] = E2/2, [E0,E3] = E3, [E1,E2] = E3
    terms = {{0, 1, 1, 0.5}, {0, 2, 2, 0.5}, {0, 3, 3, 1.0}, {1, 2, 3, 1.0}};
  } else {
    throw std::invalid_argument("make_algebra: unknown key '" + key + "'");
  }

  LieAlgebra a(dim, build_structure(dim, terms));
  a.key_ = key;
  a.params_ = params;
  return a;
}

}  // namespace solvmcf
