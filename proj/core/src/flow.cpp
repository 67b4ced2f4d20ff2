#include "solvmcf/flow.hpp"

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

Vec cross3(const Vec& a, const Vec& b) {
  return v3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

/// Generalized cross in R^4, oriented so det[a|b|c|n] > 0.
Vec cross4(const Vec& a, const Vec& b, const Vec& c) {
  auto minor = [&](int skip) {
    Eigen::Matrix3d m;
    int r = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == skip) continue;
      m(r, 0) = a[i];
      m(r, 1) = b[i];
      m(r, 2) = c[i];
      ++r;
    }
    return m.determinant();
  };
  Vec n(4);
  for (int i = 0; i < 4; ++i) n[i] = ((i % 2) ? 1.0 : -1.0) * minor(i);
  return n;
}

/// Connection table of the model's algebra, shared across node evaluations.
struct AlgCtx {
  LieAlgebra alg;
  std::vector<Vec> nabla_tbl;

  explicit AlgCtx(const GroupModel& m) : alg(m.algebra()) {
    const int d = alg.dim();
    const Mat id = Mat::Identity(d, d);
    nabla_tbl.reserve(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) nabla_tbl.push_back(alg.nabla(id.col(i), id.col(j)));
  }

  Vec quad(const Vec& a, const Vec& b) const {
    const int d = alg.dim();
    Vec out = Vec::Zero(d);
    for (int i = 0; i < d; ++i) {
      if (a[i] == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        if (b[j] == 0.0) continue;
        out += (a[i] * b[j]) * nabla_tbl[i * d + j];
      }
    }
    return out;
  }
};

CurvatureSample curvature_impl(const AlgCtx& ctx, const FlowSolution& sol, double u, double v,
                               double w, double t) {
  const GroupModel& m = sol.model;
  const int k = sol.k();
  const double h = 1e-5;

  auto coeff = [&](const std::function<Vec(double, double, double, double)>& f, double uu,
                   double vv, double ww) {
    return m.frame_coeffs(sol.phi(uu, vv, ww, t), f(uu, vv, ww, t));
  };
  auto tangent_field = [&](int dir, double uu, double vv, double ww) {
    switch (dir) {
      case 0: return coeff(sol.dphi_du, uu, vv, ww);
      case 1: return coeff(sol.dphi_dv, uu, vv, ww);
      default: return coeff(sol.dphi_dw, uu, vv, ww);
    }
  };

  std::vector<Vec> a(k);
  for (int i = 0; i < k; ++i) a[i] = tangent_field(i, u, v, w);

  Vec nu = (k == 2) ? cross3(a[0], a[1]) : cross4(a[0], a[1], a[2]);
  const double nn = nu.norm();
  if (nn < 1e-12) throw std::invalid_argument("flow: immersion failure at a node");
  nu = (sol.cross_sign / nn) * nu;

  Mat gram(k, k), alpha(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram(i, j) = a[i].dot(a[j]);
  const double det = gram.determinant();
  if (det <= 1e-12) throw std::invalid_argument("flow: immersion failure at a node");

  auto shift = [&](int dir, double s, double& uu, double& vv, double& ww) {
    if (dir == 0) uu += s;
    if (dir == 1) vv += s;
    if (dir == 2) ww += s;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      double up = u, vp = v, wp = w, um = u, vm = v, wm = w;
      shift(i, h, up, vp, wp);
      shift(i, -h, um, vm, wm);
      const Vec da = (tangent_field(j, up, vp, wp) - tangent_field(j, um, vm, wm)) / (2.0 * h);
      const Vec cov = da + ctx.quad(a[i], a[j]);
      alpha(i, j) = alpha(j, i) = cov.dot(nu);
    }

  CurvatureSample s;
  s.H = -(gram.inverse() * alpha).trace();
  s.nu_frame = nu;
  s.dt_normal = coeff(sol.dphi_dt, u, v, w).dot(nu);
  s.gram_det = det;
  return s;
}

}  // namespace

CurvatureSample solution_curvature(const FlowSolution& sol, double u, double v, double w,
                                   double t) {
  AlgCtx ctx(sol.model);
  return curvature_impl(ctx, sol, u, v, w, t);
}

// ---------------------------------------------------------------------------
// closed-form catalogue
// ---------------------------------------------------------------------------

FlowSolution closed_form_solution(const GroupModel& m, const std::string& family_tag,
                                  const std::vector<double>& params, bool literal) {
  FlowSolution sol;
  sol.model = m;
  sol.family_tag = family_tag;
  sol.params = params;
  sol.literal = literal;
  sol.id = family_tag + "@" + m.spec_string() + (literal ? "+literal" : "");
  const double l1 = m.l1(), l2 = m.l2();

  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("closed_form_solution: " + family_tag + " expects " +
                                  std::to_string(n) + " parameter(s)");
  };

  if (family_tag == "K0" && m.family() != Family::G4) {
    need(0);
    const double speed = (m.family() == Family::S3LambdaPair) ? (l1 + l2) : 2.0 * l1;
    sol.phi = [speed](double u, double v, double, double t) { return v3(u, v, speed * t); };
    sol.dphi_dt = [speed](double, double, double, double) { return v3(0, 0, speed); };
    sol.dphi_du = [](double, double, double, double) { return v3(1, 0, 0); };
    sol.dphi_dv = [](double, double, double, double) { return v3(0, 1, 0); };
    sol.graph_residual = [speed](const Vec& p, double t) { return std::abs(p[2] - speed * t); };
    sol.formula_note = "translating plane z = " + std::to_string(speed) + " t";
    return sol;
  }

  if (family_tag == "G4_H3") {
    if (m.family() != Family::G4)
      throw std::invalid_argument("closed_form_solution: G4_H3 needs the g4 model");
    need(0);
    sol.phi = [](double u, double v, double w, double t) { return v4(2.0 * t, u, v, w); };
    sol.dphi_dt = [](double, double, double, double) { return v4(2, 0, 0, 0); };
    sol.dphi_du = [](double, double, double, double) { return v4(0, 1, 0, 0); };
    sol.dphi_dv = [](double, double, double, double) { return v4(0, 0, 1, 0); };
    sol.dphi_dw = [](double, double, double, double) { return v4(0, 0, 0, 1); };
    sol.graph_residual = [](const Vec& p, double t) { return std::abs(p[0] - 2.0 * t); };
    sol.cross_sign = -1.0;
    sol.formula_note = "translating hyperplane s = 2t";
    return sol;
  }

  // exponential graph families; the literal variant keeps the printed
  // (non-decaying) time exponent, which fails the flow equation
  struct ExpGraph {
    double rate;         // lambda multiplying the chart coordinate z
    double kappa;        // verified exponent of c(t)
    double kappa_paper;  // printed exponent
  };
  auto finish_exp_graph = [&](const ExpGraph& eg, double coefA, double shear, bool x_graph) {
    // x_graph: graph slot is x (K2a, K4ef), else y (Ka, K1b, K3cd)
    const double rate = eg.rate;
    const double kap = literal ? eg.kappa_paper : eg.kappa;
    const bool flat = std::abs(rate) < 1e-12;  // lambda = 0 member: static line graph
    sol.kappa = flat ? 0.0 : eg.kappa;
    sol.kappa_paper = flat ? 0.0 : eg.kappa_paper;
    auto val = [rate, kap, coefA, flat](double z, double t) {
      if (flat) return coefA * z;
      return coefA * std::expm1(rate * z + kap * t) / rate;
    };
    auto dval_dt = [rate, kap, coefA, flat](double z, double t) {
      if (flat) return 0.0;
      return coefA * (kap / rate) * std::exp(rate * z + kap * t);
    };
    auto dval_dz = [rate, kap, coefA, flat](double z, double t) {
      if (flat) return coefA;
      return coefA * std::exp(rate * z + kap * t);
    };
    if (!x_graph) {
      sol.phi = [val, shear](double u, double v, double, double t) {
        return v3(u, shear * u + val(v, t), v);
      };
      sol.dphi_dt = [dval_dt](double, double v, double, double t) {
        return v3(0, dval_dt(v, t), 0);
      };
      sol.dphi_du = [shear](double, double, double, double) { return v3(1, shear, 0); };
      sol.dphi_dv = [dval_dz](double, double v, double, double t) {
        return v3(0, dval_dz(v, t), 1);
      };
      sol.graph_residual = [val, shear](const Vec& p, double t) {
        return std::abs(p[1] - shear * p[0] - val(p[2], t));
      };
      sol.cross_sign = 1.0;
    } else {
      sol.phi = [val, shear](double u, double v, double, double t) {
        return v3(shear * u + val(v, t), u, v);
      };
      sol.dphi_dt = [dval_dt](double, double v, double, double t) {
        return v3(dval_dt(v, t), 0, 0);
      };
      sol.dphi_du = [shear](double, double, double, double) { return v3(shear, 1, 0); };
      sol.dphi_dv = [dval_dz](double, double v, double, double t) {
        return v3(dval_dz(v, t), 0, 1);
      };
      sol.graph_residual = [val, shear](const Vec& p, double t) {
        return std::abs(p[0] - shear * p[1] - val(p[2], t));
      };
      sol.cross_sign = -1.0;
    }
    if (std::abs(rate) > 1e-12) {
      // d/dc of the slot value coefA (c e^{rate z} - 1)/rate at c(t) = e^{kap t}
      sol.dphi_dc = [rate, coefA, x_graph](double, double v, double, double) {
        const double d = coefA * std::exp(rate * v) / rate;
        return x_graph ? v3(d, 0, 0) : v3(0, d, 0);
      };
    }
  };

  if (m.family() == Family::S3Lambda && family_tag == "Ka") {
    need(1);
    finish_exp_graph({l1, -2.0 * l1 * l1, l1 * l1}, params[0], 0.0, false);
    sol.formula_note = "y = a (e^{l(z - 2 l t)} - 1)/l";
    return sol;
  }

  if (m.family() == Family::S3LambdaPair) {
    const bool equal = std::abs(l1 - l2) < 1e-12;
    if (family_tag == "K1b") {
      need(1);
      if (equal)
        throw std::invalid_argument("closed_form_solution: K1b needs lambda1 != lambda2");
      if (std::abs(l2) < 1e-12) {
        // abelian translator; the printed formula carries the opposite drift sign
        const double b = params[0], drift = (literal ? 1.0 : -1.0) * l1;
        sol.phi = [b, drift](double u, double v, double, double t) {
          return v3(u, b * (v + drift * t), v);
        };
        sol.dphi_dt = [b, drift](double, double, double, double) {
          return v3(0, b * drift, 0);
        };
        sol.dphi_du = [](double, double, double, double) { return v3(1, 0, 0); };
        sol.dphi_dv = [b](double, double, double, double) { return v3(0, b, 1); };
        sol.graph_residual = [b, drift](const Vec& p, double t) {
          return std::abs(p[1] - b * (p[2] + drift * t));
        };
        sol.formula_note = "y = b (z - l1 t), translating in the flat direction";
        return sol;
      }
      finish_exp_graph({l2, -(l1 + l2) * l2, (l1 + l2) * l2}, params[0], 0.0, false);
      sol.formula_note = "y = b (e^{l2 z - (l1+l2) l2 t} - 1)/l2";
      return sol;
    }
    if (family_tag == "K2a") {
      need(1);
      if (equal)
        throw std::invalid_argument("closed_form_solution: K2a needs lambda1 != lambda2");
      finish_exp_graph({l1, -(l1 + l2) * l1, (l1 + l2) * l1}, params[0], 0.0, true);
      sol.formula_note = "x = a (e^{l1 z - (l1+l2) l1 t} - 1)/l1";
      return sol;
    }
    if (family_tag == "K3cd") {
      need(2);
      if (!equal)
        throw std::invalid_argument("closed_form_solution: K3cd needs lambda1 == lambda2");
      finish_exp_graph({l1, -2.0 * l1 * l1, 2.0 * l1 * l1}, params[1], params[0], false);
      sol.formula_note = "y = c x + d (e^{l(z - 2 l t)} - 1)/l";
      return sol;
    }
    if (family_tag == "K4ef") {
      need(2);
      if (!equal)
        throw std::invalid_argument("closed_form_solution: K4ef needs lambda1 == lambda2");
      finish_exp_graph({l1, -2.0 * l1 * l1, l1 * l1}, params[1], params[0], true);
      sol.formula_note = "x = e y + f (e^{l(z - 2 l t)} - 1)/l";
      return sol;
    }
  }

  throw std::invalid_argument("closed_form_solution: no family '" + family_tag + "' for model " +
                              m.spec_string());
}

// ---------------------------------------------------------------------------
// verifier
// ---------------------------------------------------------------------------

FlowVerifyReport verify_flow(const FlowSolution& sol, const std::vector<double>& times, double tol,
                             int nu, int nv, double lo, double hi) {
  AlgCtx ctx(sol.model);
  FlowVerifyReport rep;
  rep.id = sol.id;
  rep.literal = sol.literal;
  rep.tol = tol;
  rep.times = times;

  const int k = sol.k();
  const double hu = (hi - lo) / (nu - 1), hv = (hi - lo) / (nv - 1);
  const int nw = (k == 3) ? nv : 3;  // third chart direction only for 4d models
  const double hw = (k == 3) ? hv : 0.0;

  for (double t : times)
    for (int i = 1; i + 1 < nu; ++i)
      for (int j = 1; j + 1 < nv; ++j)
        for (int q = 1; q + 1 < nw; ++q) {
          const double u = lo + i * hu, v = lo + j * hv, w = (k == 3) ? lo + q * hw : 0.0;
          const CurvatureSample s = curvature_impl(ctx, sol, u, v, w, t);
          rep.sup_residual = std::max(rep.sup_residual, std::abs(s.dt_normal + s.H));
          ++rep.nodes;
        }
  rep.pass = rep.sup_residual < tol;
  return rep;
}

// ---------------------------------------------------------------------------
// grid machinery
// ---------------------------------------------------------------------------

namespace {

/// Chart tangent at a node; second-order one-sided at the grid edge.
Vec grid_tangent(const SurfacePatch& P, int i, int j, int dir, bool& one_sided) {
  const double h = dir == 0 ? P.hu() : P.hv();
  auto node = [&](int a, int b) -> const Vec& { return P.at(a, b); };
  int n = dir == 0 ? P.nu : P.nv;
  int idx = dir == 0 ? i : j;
  if (idx > 0 && idx + 1 < n) {
    return dir == 0 ? Vec((node(i + 1, j) - node(i - 1, j)) / (2.0 * h))
                    : Vec((node(i, j + 1) - node(i, j - 1)) / (2.0 * h));
  }
  one_sided = true;
  const int s = (idx == 0) ? 1 : -1;
  auto at_off = [&](int o) -> const Vec& {
    return dir == 0 ? node(i + s * o, j) : node(i, j + s * o);
  };
  return Vec((s / (2.0 * h)) * (-3.0 * at_off(0) + 4.0 * at_off(1) - at_off(2)));
}

struct GridCoeffs {
  std::vector<Vec> au, av;  // frame coefficients of the chart tangents
  std::vector<bool> edge;
};

GridCoeffs grid_coeffs(const SurfacePatch& P) {
  GridCoeffs g;
  const int n = P.nu * P.nv;
  g.au.resize(n);
  g.av.resize(n);
  g.edge.assign(n, false);
  for (int i = 0; i < P.nu; ++i)
    for (int j = 0; j < P.nv; ++j) {
      bool os = false;
      const Vec tu = grid_tangent(P, i, j, 0, os);
      const Vec tv = grid_tangent(P, i, j, 1, os);
      const Vec& p = P.at(i, j);
      g.au[i * P.nv + j] = P.model.frame_coeffs(p, tu);
      g.av[i * P.nv + j] = P.model.frame_coeffs(p, tv);
      g.edge[i * P.nv + j] = os;
    }
  return g;
}

struct NodeForms {
  double E, F, G, L, M, N, H, det;
  Vec nu_frame;
  bool one_sided;
};

NodeForms node_forms(const AlgCtx& ctx, const SurfacePatch& P, const GridCoeffs& g, int i, int j) {
  auto field = [&](const std::vector<Vec>& f, int a, int b) -> const Vec& {
    return f[a * P.nv + b];
  };
  auto dfield = [&](const std::vector<Vec>& f, int dir, bool& os) {
    const double h = dir == 0 ? P.hu() : P.hv();
    const int n = dir == 0 ? P.nu : P.nv;
    const int idx = dir == 0 ? i : j;
    if (idx > 0 && idx + 1 < n)
      return dir == 0 ? Vec((field(f, i + 1, j) - field(f, i - 1, j)) / (2.0 * h))
                      : Vec((field(f, i, j + 1) - field(f, i, j - 1)) / (2.0 * h));
    os = true;
    const int s = (idx == 0) ? 1 : -1;
    auto at_off = [&](int o) -> const Vec& {
      return dir == 0 ? field(f, i + s * o, j) : field(f, i, j + s * o);
    };
    return Vec((s / (2.0 * h)) * (-3.0 * at_off(0) + 4.0 * at_off(1) - at_off(2)));
  };

  NodeForms out;
  const Vec& au = field(g.au, i, j);
  const Vec& av = field(g.av, i, j);
  out.one_sided = g.edge[i * P.nv + j] || i < 2 || i + 2 >= P.nu || j < 2 || j + 2 >= P.nv;
  out.E = au.dot(au);
  out.F = au.dot(av);
  out.G = av.dot(av);
  out.det = out.E * out.G - out.F * out.F;
  Vec nu = cross3(au, av);
  const double nn = nu.norm();
  if (nn < 1e-12 || out.det <= 1e-12)
    throw std::runtime_error("flow: immersion degeneration at a grid node");
  nu *= P.orientation / nn;
  out.nu_frame = nu;

  bool os = out.one_sided;
  const Vec duau = dfield(g.au, 0, os);
  const Vec duav = dfield(g.av, 0, os);
  const Vec dvav = dfield(g.av, 1, os);
  out.one_sided = os;
  out.L = (duau + ctx.quad(au, au)).dot(nu);
  out.M = (duav + ctx.quad(au, av)).dot(nu);
  out.N = (dvav + ctx.quad(av, av)).dot(nu);
  out.H = -(out.G * out.L - 2.0 * out.F * out.M + out.E * out.N) / out.det;
  return out;
}

}  // namespace

Forms2D fundamental_forms(const SurfacePatch& patch, int i, int j) {
  AlgCtx ctx(patch.model);
  GridCoeffs g = grid_coeffs(patch);
  NodeForms nf = node_forms(ctx, patch, g, i, j);
  return Forms2D{nf.E, nf.F, nf.G, nf.L, nf.M, nf.N, nf.nu_frame, nf.one_sided};
}

double patch_mean_curvature(const SurfacePatch& patch, int i, int j) {
  AlgCtx ctx(patch.model);
  GridCoeffs g = grid_coeffs(patch);
  return node_forms(ctx, patch, g, i, j).H;
}

SurfacePatch make_patch(const FlowSolution& sol, double t, int nu, int nv, double lo, double hi) {
  if (sol.k() != 2) throw std::invalid_argument("make_patch: 2-parameter charts only");
  SurfacePatch p{sol.model, nu, nv, lo, hi, lo, hi, {}, sol.cross_sign};
  p.pts.resize(nu * nv);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) p.at(i, j) = sol.phi(p.u_at(i), p.v_at(j), 0.0, t);
  return p;
}

double sup_graph_distance(const SurfacePatch& patch, const FlowSolution& sol, double t) {
  double worst = 0.0;
  for (int i = 1; i + 1 < patch.nu; ++i)
    for (int j = 1; j + 1 < patch.nv; ++j)
      worst = std::max(worst, sol.graph_residual(patch.at(i, j), t));
  return worst;
}

McfTrajectory integrate_mcf(const SurfacePatch& initial, const McfOptions& opt) {
  if (initial.model.dim() != 3)
    throw std::invalid_argument("integrate_mcf: 3-dimensional models only");
  if (opt.boundary == BoundaryMode::PinnedToSolution && opt.pin == nullptr)
    throw std::invalid_argument("integrate_mcf: pinned boundary needs a solution");

  AlgCtx ctx(initial.model);

  // curvature-based stability bound at t = 0
  {
    GridCoeffs g = grid_coeffs(initial);
    double kmax = 0.0;
    for (int i = 1; i + 1 < initial.nu; ++i)
      for (int j = 1; j + 1 < initial.nv; ++j) {
        NodeForms nf = node_forms(ctx, initial, g, i, j);
        // eigenvalues of the shape operator I^{-1} II
        const double tr = (nf.G * nf.L - 2.0 * nf.F * nf.M + nf.E * nf.N) / nf.det;
        const double dd = (nf.L * nf.N - nf.M * nf.M) / nf.det;
        const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - dd));
        kmax = std::max({kmax, std::abs(tr / 2.0 + disc), std::abs(tr / 2.0 - disc)});
      }
    const double h = std::min(initial.hu(), initial.hv());
    const double dt_max = opt.cfl_safety * h * h / std::max(kmax, 1e-12);
    if (opt.dt > dt_max)
      throw std::invalid_argument("integrate_mcf: CFL violation, dt exceeds " +
                                  std::to_string(dt_max));
  }

  McfTrajectory traj;
  SurfacePatch cur = initial;
  std::vector<Vec> next(cur.pts.size());
  if (opt.snapshot_stride > 0) {
    traj.times.push_back(0.0);
    traj.snapshots.push_back(cur);
  }

  for (int step = 0; step < opt.steps; ++step) {
    const double t_next = (step + 1) * opt.dt;
    GridCoeffs g = grid_coeffs(cur);
    for (int i = 0; i < cur.nu; ++i)
      for (int j = 0; j < cur.nv; ++j) {
        if (!cur.interior(i, j)) {
          if (opt.boundary == BoundaryMode::PinnedToSolution)
            next[i * cur.nv + j] = opt.pin->phi(cur.u_at(i), cur.v_at(j), 0.0, t_next);
          else
            next[i * cur.nv + j] = cur.at(i, j);
          continue;
        }
        NodeForms nf = node_forms(ctx, cur, g, i, j);
        const Vec& p = cur.at(i, j);
        next[i * cur.nv + j] = p + opt.dt * (-nf.H) * cur.model.push_frame(p, nf.nu_frame);
      }
    cur.pts = next;
    if (opt.snapshot_stride > 0 && (step + 1) % opt.snapshot_stride == 0) {
      traj.times.push_back(t_next);
      traj.snapshots.push_back(cur);
    }
  }
  traj.final_time = opt.steps * opt.dt;
  if (traj.snapshots.empty() || traj.times.back() != traj.final_time) {
    traj.times.push_back(traj.final_time);
    traj.snapshots.push_back(cur);
  }
  return traj;
}

AnsatzReport ansatz_ode_check(const GroupModel& m, const std::string& family_tag,
                              const std::vector<double>& params) {
  FlowSolution sol = closed_form_solution(m, family_tag, params, false);
  AnsatzReport rep;
  rep.id = sol.id;
  rep.kappa_catalogue = sol.kappa;
  rep.kappa_paper = sol.kappa_paper;

  if (!sol.dphi_dc) {
    rep.kappa_implied = 0.0;
    rep.node_spread = 0.0;
    rep.matches_catalogue = sol.kappa == 0.0;
    rep.matches_paper_literal = sol.kappa_paper == 0.0;
    return rep;
  }

  AlgCtx ctx(sol.model);
  double lo_k = std::numeric_limits<double>::infinity(), hi_k = -lo_k, sum = 0.0;
  int count = 0;
  for (double u : {-0.6, 0.1, 0.7})
    for (double v : {-0.5, 0.2, 0.8}) {
      const CurvatureSample s = curvature_impl(ctx, sol, u, v, 0.0, 0.0);
      const Vec dc = sol.model.frame_coeffs(sol.phi(u, v, 0.0, 0.0), sol.dphi_dc(u, v, 0.0, 0.0));
      const double denom = dc.dot(s.nu_frame);
      if (std::abs(denom) < 1e-12) continue;
      const double kap = -s.H / denom;
      lo_k = std::min(lo_k, kap);
      hi_k = std::max(hi_k, kap);
      sum += kap;
      ++count;
    }
  if (count == 0) throw std::runtime_error("ansatz_ode_check: degenerate sample");
  rep.kappa_implied = sum / count;
  rep.node_spread = hi_k - lo_k;
  rep.matches_catalogue = std::abs(rep.kappa_implied - rep.kappa_catalogue) < 1e-8;
  rep.matches_paper_literal = std::abs(rep.kappa_implied - rep.kappa_paper) < 1e-8;
  return rep;
}

}  // namespace solvmcf
