#include "solvmcf/subalgebra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace solvmcf {

namespace {

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

Vec v4(double a, double b, double c, double d) {
  Vec v(4);
  v << a, b, c, d;
  return v;
}

/// (e^{l v} - 1)/l with the l -> 0 limit value v.
double expm1_over(double l, double v) {
  if (std::abs(l) < 1e-12) return v;
  return std::expm1(l * v) / l;
}

/// Metric Gram-Schmidt; throws when the input is not independent.
std::vector<Vec> orthonormalize(const LieAlgebra& A, const std::vector<Vec>& basis,
                                const char* who) {
  std::vector<Vec> out;
  for (const Vec& b : basis) {
    Vec w = b;
    for (const Vec& q : out) w -= A.inner(q, w) * q;
    double n = A.norm(w);
    // relative independence gate, consistent with kRankTolerance
    double scale = std::max(1.0, A.norm(b));
    if (n <= kRankTolerance * scale)
      throw std::invalid_argument(std::string(who) + ": basis not linearly independent");
    out.push_back(w / n);
  }
  return out;
}

}  // namespace

bool Subalgebra::is_abelian(double tol) const {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (parent.norm(parent.bracket(basis[i], basis[j])) > tol) return false;
  return true;
}

bool Subalgebra::is_nilpotent_2step(double tol) const {
  std::vector<Vec> c1;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Vec w = parent.bracket(basis[i], basis[j]);
      if (parent.norm(w) > tol) c1.push_back(w);
    }
  if (c1.empty()) return false;  // abelian, i.e. 1-step
  for (const Vec& b : basis)
    for (const Vec& w : c1)
      if (parent.norm(parent.bracket(b, w)) > tol) return false;
  return true;
}

double closure_defect(const LieAlgebra& A, const std::vector<Vec>& basis) {
  auto on = orthonormalize(A, basis, "closure_defect");
  double worst = 0.0;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Vec w = A.bracket(basis[i], basis[j]);
      for (const Vec& q : on) w -= A.inner(q, w) * q;
      worst = std::max(worst, A.norm(w));
    }
  return worst;
}

double closure_defect(const LieAlgebra& A, const Vec& X, const Vec& Y) {
  return closure_defect(A, std::vector<Vec>{X, Y});
}

namespace {

double point_distance(const Vec& n, const Vec& p) {
  return std::min((n - p).norm(), (n + p).norm());
}

SubalgebraFamily k0_family(const LieAlgebra& A) {
  SubalgebraFamily f;
  f.tag = "K0";
  f.make = [A](const std::vector<double>&) {
    Subalgebra k{A, {v3(1, 0, 0), v3(0, 1, 0)}, "K0", {}, v3(0, 0, 1), nullptr};
    k.embed = [](const Vec& uv) { return v3(uv[0], uv[1], 0.0); };
    return k;
  };
  f.normal_distance = [](const Vec& n) { return point_distance(n, v3(0, 0, 1)); };
  return f;
}

}  // namespace

std::vector<SubalgebraFamily> catalogue_subalgebras(const LieAlgebra& A) {
  const std::string& key = A.key();
  std::vector<SubalgebraFamily> fams;

  if (key == "r3[l]" || key == "h3") {
    const double l = key == "h3" ? 0.0 : A.params()[0];
    fams.push_back(k0_family(A));
    SubalgebraFamily ka;
    ka.tag = "Ka";
    ka.param_names = {"a"};
    ka.make = [A, l](const std::vector<double>& p) {
      const double a = p.at(0);
      Subalgebra k{A, {v3(0, a, 1), v3(1, 0, 0)}, "Ka", {a},
                   v3(0, -1, a).normalized(), nullptr};
      k.embed = [a, l](const Vec& uv) { return v3(uv[0], a * expm1_over(l, uv[1]), uv[1]); };
      return k;
    };
    ka.normal_distance = [](const Vec& n) { return std::abs(n[0]); };
    fams.push_back(std::move(ka));
    return fams;
  }

  if (key == "r3[l1,l2]") {
    const double l1 = A.params()[0], l2 = A.params()[1];
    fams.push_back(k0_family(A));
    const bool equal = std::abs(l1 - l2) < 1e-12;
    if (!equal) {
      SubalgebraFamily k1;
      k1.tag = "K1b";
      k1.param_names = {"b"};
      k1.make = [A, l2](const std::vector<double>& p) {
        const double b = p.at(0);
        Subalgebra k{A, {v3(1, 0, 0), v3(0, b, 1)}, "K1b", {b},
                     v3(0, -1, b).normalized(), nullptr};
        k.embed = [b, l2](const Vec& uv) { return v3(uv[0], b * expm1_over(l2, uv[1]), uv[1]); };
        return k;
      };
      k1.normal_distance = [](const Vec& n) { return std::abs(n[0]); };
      fams.push_back(std::move(k1));

      SubalgebraFamily k2;
      k2.tag = "K2a";
      k2.param_names = {"a"};
      k2.make = [A, l1](const std::vector<double>& p) {
        const double a = p.at(0);
        Subalgebra k{A, {v3(0, 1, 0), v3(a, 0, 1)}, "K2a", {a},
                     v3(-1, 0, a).normalized(), nullptr};
        k.embed = [a, l1](const Vec& uv) { return v3(a * expm1_over(l1, uv[1]), uv[0], uv[1]); };
        return k;
      };
      k2.normal_distance = [](const Vec& n) { return std::abs(n[1]); };
      fams.push_back(std::move(k2));
    } else {
      SubalgebraFamily k3;
      k3.tag = "K3cd";
      k3.param_names = {"c", "d"};
      k3.make = [A, l1](const std::vector<double>& p) {
        const double c = p.at(0), d = p.at(1);
        Subalgebra k{A, {v3(1, c, 0), v3(0, d, 1)}, "K3cd", {c, d},
                     v3(c, -1, d).normalized(), nullptr};
        k.embed = [c, d, l1](const Vec& uv) {
          return v3(uv[0], c * uv[0] + d * expm1_over(l1, uv[1]), uv[1]);
        };
        return k;
      };
      // {(c,-1,d)} is dense in Gr(2,3): every plane lies in its closure
      k3.normal_distance = [](const Vec&) { return 0.0; };
      fams.push_back(std::move(k3));

      SubalgebraFamily k4;
      k4.tag = "K4ef";
      k4.param_names = {"e", "f"};
      k4.make = [A, l1](const std::vector<double>& p) {
        const double e = p.at(0), f = p.at(1);
        Subalgebra k{A, {v3(e, 1, 0), v3(f, 0, 1)}, "K4ef", {e, f},
                     v3(-1, e, f).normalized(), nullptr};
        k.embed = [e, f, l1](const Vec& uv) {
          return v3(e * uv[0] + f * expm1_over(l1, uv[1]), uv[0], uv[1]);
        };
        return k;
      };
      k4.normal_distance = [](const Vec&) { return 0.0; };
      fams.push_back(std::move(k4));
    }
    return fams;
  }

  if (key == "r3p[l]") {
    fams.push_back(k0_family(A));
    return fams;
  }

  if (key == "sl2") {
    SubalgebraFamily k1;
    k1.tag = "SL2_K1";
    k1.make = [A](const std::vector<double>&) {
      return Subalgebra{A, {v3(1, 0, 0), v3(0, 0, 1)}, "SL2_K1", {}, Vec(), nullptr};
    };
    k1.normal_distance = [](const Vec& n) { return point_distance(n, v3(0, 1, 0)); };
    fams.push_back(std::move(k1));

    SubalgebraFamily k2;
    k2.tag = "SL2_K2";
    k2.make = [A](const std::vector<double>&) {
      return Subalgebra{A, {v3(1, 0, 0), v3(0, 1, 0)}, "SL2_K2", {}, Vec(), nullptr};
    };
    k2.normal_distance = [](const Vec& n) { return point_distance(n, v3(0, 0, 1)); };
    fams.push_back(std::move(k2));

    SubalgebraFamily k3;
    k3.tag = "SL2_K3rho";
    k3.param_names = {"rho"};
    k3.make = [A](const std::vector<double>& p) {
      const double rho = p.at(0);
      if (std::abs(rho) < 1e-12)
        throw std::invalid_argument("SL2_K3rho: rho must be nonzero");
      return Subalgebra{A,
                        {v3(0, rho, 1.0 / rho), v3(1, rho, -1.0 / rho)},
                        "SL2_K3rho",
                        {rho},
                        Vec(),
                        nullptr};
    };
    // normals sweep the quadric n0^2 + 4 n1 n2 = 0
    k3.normal_distance = [](const Vec& n) {
      const double q = n[0] * n[0] + 4.0 * n[1] * n[2];
      const Vec grad = v3(2.0 * n[0], 4.0 * n[2], 4.0 * n[1]);
      return std::abs(q) / std::max(grad.norm(), 1e-12);
    };
    fams.push_back(std::move(k3));
    return fams;
  }

  if (key == "su2") return fams;  // no 2-dimensional subalgebras

  if (key == "g4") {
    SubalgebraFamily h3;
    h3.tag = "G4_H3";
    h3.make = [A](const std::vector<double>&) {
      Subalgebra k{A,
                   {v4(0, 1, 0, 0), v4(0, 0, 1, 0), v4(0, 0, 0, 1)},
                   "G4_H3",
                   {},
                   v4(1, 0, 0, 0),
                   nullptr};
      k.embed = [](const Vec& uvw) { return v4(0.0, uvw[0], uvw[1], uvw[2]); };
      return k;
    };
    fams.push_back(std::move(h3));
    return fams;
  }

  throw std::invalid_argument("catalogue_subalgebras: unknown algebra key '" + key + "'");
}

std::vector<Subalgebra> materialize_catalogue(const LieAlgebra& A, double param_value) {
  std::vector<Subalgebra> out;
  for (const auto& f : catalogue_subalgebras(A)) {
    std::vector<double> p(f.param_names.size(), param_value);
    out.push_back(f.make(p));
  }
  return out;
}

namespace {

/// Closure defect of the plane orthogonal to unit n (identity metric):
/// |<[u,v], n>| for an orthonormal basis u,v of the orthogonal complement.
/// The value is basis-independent because [.,.] is antisymmetric.
struct PlaneDefect {
  const LieAlgebra& A;

  double operator()(const Eigen::Vector3d& n) const {
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(n[i]) < std::abs(n[k])) k = i;
    Eigen::Vector3d u = Eigen::Vector3d::Unit(k) - n[k] * n;
    u.normalize();
    Eigen::Vector3d v = n.cross(u);
    Vec w = A.bracket(u, v);
    return std::abs(w[0] * n[0] + w[1] * n[1] + w[2] * n[2]);
  }
};

}  // namespace

SearchReport random_search_verify(const LieAlgebra& A, long trials, Rng& rng) {
  if (A.dim() != 3)
    throw std::invalid_argument("random_search_verify: 3-dimensional algebras only");
  if (!A.metric_is_identity())
    throw std::invalid_argument("random_search_verify: catalogue metric must be the identity");

  const auto families = catalogue_subalgebras(A);
  PlaneDefect defect{A};

  SearchReport rep;
  rep.trials = trials;
  rep.family_hits.assign(families.size(), 0);

  auto check_candidate = [&](const Eigen::Vector3d& n) {
    ++rep.closed_found;
    double best = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    for (size_t i = 0; i < families.size(); ++i) {
      double d = families[i].normal_distance(n);
      if (d < best) {
        best = d;
        best_idx = static_cast<int>(i);
      }
    }
    if (best_idx >= 0 && best < 1e-6) {
      ++rep.matched;
      ++rep.family_hits[best_idx];
      rep.max_match_distance = std::max(rep.max_match_distance, best);
    } else if (rep.unmatched.size() < 32) {
      rep.unmatched.push_back(n);
    }
  };

  for (long trial = 0; trial < trials; ++trial) {
    Eigen::Vector3d n;
    {
      Vec r = rng.unit_vector(3);
      n << r[0], r[1], r[2];
    }
    double f = defect(n);
    if (f < 1e-8) {
      check_candidate(n);
      continue;
    }

    // projected descent of defect^2 over the sphere
    double f2 = f * f;
    double step = 0.25;
    const double h = 1e-5;
    bool converged = false;
    for (int iter = 0; iter < 60; ++iter) {
      // tangent frame at n
      int k = 0;
      for (int i = 1; i < 3; ++i)
        if (std::abs(n[i]) < std::abs(n[k])) k = i;
      Eigen::Vector3d t1 = (Eigen::Vector3d::Unit(k) - n[k] * n).normalized();
      Eigen::Vector3d t2 = n.cross(t1);
      auto f2at = [&](const Eigen::Vector3d& m) {
        double d = defect(m.normalized());
        return d * d;
      };
      double g1 = (f2at(n + h * t1) - f2at(n - h * t1)) / (2.0 * h);
      double g2 = (f2at(n + h * t2) - f2at(n - h * t2)) / (2.0 * h);
      double gn2 = g1 * g1 + g2 * g2;
      if (gn2 < 1e-28) break;  // stalled (flat or at a critical point)
      bool improved = false;
      for (int bt = 0; bt < 20; ++bt) {
        Eigen::Vector3d cand = (n - step * (g1 * t1 + g2 * t2)).normalized();
        double fc = f2at(cand);
        if (fc < f2 - 0.1 * step * gn2) {
          n = cand;
          f2 = fc;
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
      step = std::min(step * 1.8, 1.0);
      if (f2 < 1e-20) {
        converged = true;
        break;
      }
    }
    if (converged || std::sqrt(f2) < 1e-8) check_candidate(n);
  }
  return rep;
}

std::vector<Vec> sample_on_subgroup(const Subalgebra& K, int count, Rng& rng, double range) {
  if (!K.embed) throw std::invalid_argument("sample_on_subgroup: family has no coordinate chart");
  const int k = K.parent.dim() - 1;
  std::vector<Vec> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(K.embed(rng.uniform_vector(k, -range, range)));
  return pts;
}

}  // namespace solvmcf
