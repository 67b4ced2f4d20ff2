#include "solvmcf/killing.hpp"

#include <cmath>
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

}  // namespace

std::vector<KillingField> killing_basis(const GroupModel& m) {
  std::vector<KillingField> fields;
  const double l1 = m.l1(), l2 = m.l2();

  switch (m.family()) {
    case Family::S3Lambda: {
      fields.push_back({"E1t", [](const Vec&) { return v3(1, 0, 0); }});
      fields.push_back({"E2t", [](const Vec&) { return v3(0, 1, 0); }});
      fields.push_back({"E3t", [l1](const Vec& p) {
                          return v3(l1 * p[0] + p[1], l1 * p[1], 1.0);
                        }});
      break;
    }
    case Family::S3LambdaPair: {
      fields.push_back({"E1t", [](const Vec&) { return v3(1, 0, 0); }});
      fields.push_back({"E2t", [](const Vec&) { return v3(0, 1, 0); }});
      fields.push_back({"E3t", [l1, l2](const Vec& p) {
                          return v3(l1 * p[0], l2 * p[1], 1.0);
                        }});
      if (std::abs(l1 - l2) < 1e-12) {
        // isometry group of the hyperbolic space H^3_lambda; rotation plus the
        // two special-conformal generators of the half-space model
        const double l = l1;
        fields.push_back({"T1", [](const Vec& p) { return v3(-p[1], p[0], 0.0); }});
        fields.push_back({"T2", [l](const Vec& p) {
                            const double w2 = std::exp(2.0 * l * p[2]) / (l * l);
                            return v3(p[0] * p[0] - p[1] * p[1] - w2, 2.0 * p[0] * p[1],
                                      2.0 * p[0] / l);
                          }});
        fields.push_back({"T3", [l](const Vec& p) {
                            const double w2 = std::exp(2.0 * l * p[2]) / (l * l);
                            return v3(2.0 * p[0] * p[1], p[1] * p[1] - p[0] * p[0] - w2,
                                      2.0 * p[1] / l);
                          }});
      } else if (std::abs(l2) < 1e-12) {
        // rotation of the hyperbolic-plane factor of H^2_lambda1 x R
        fields.push_back({"T", [l1](const Vec& p) {
                            const double w2 = std::exp(2.0 * l1 * p[2]) / (l1 * l1);
                            return v3(p[0] * p[0] - w2, 0.0, 2.0 * p[0] / l1);
                          }});
      }
      break;
    }
    case Family::S3Prime: {
      fields.push_back({"E1t", [](const Vec&) { return v3(1, 0, 0); }});
      fields.push_back({"E2t", [](const Vec&) { return v3(0, 1, 0); }});
      fields.push_back({"E3t", [l1](const Vec& p) {
                          return v3(l1 * p[0] + p[1], -p[0] + l1 * p[1], 1.0);
                        }});
      fields.push_back({"T", [](const Vec& p) { return v3(p[1], -p[0], 0.0); }});
      break;
    }
    case Family::G4: {
      fields.push_back({"E0t", [](const Vec& p) {
                          return v4(1.0, p[1] / 2.0, p[2] / 2.0, p[3]);
                        }});
      fields.push_back({"E1t", [](const Vec& p) { return v4(0, 1, 0, p[2] / 2.0); }});
      fields.push_back({"E2t", [](const Vec& p) { return v4(0, 0, 1, -p[1] / 2.0); }});
      fields.push_back({"E3t", [](const Vec&) { return v4(0, 0, 0, 1); }});
      break;
    }
  }
  return fields;
}

Vec right_invariant_field(const GroupModel& m, const Vec& W, const Vec& p, double h) {
  if (W.size() != m.dim()) throw std::invalid_argument("right_invariant_field: dimension mismatch");
  const Vec pinv = m.inverse(p);
  // conjugation derivative: Ad(p^{-1}) W = d/dt|_0 p^{-1} (e + tW) p.
  // frame(identity) = I, so the coordinate curve e + tW has tangent W.
  const Vec cp = m.multiply(pinv, m.multiply(Vec(h * W), p));
  const Vec cm = m.multiply(pinv, m.multiply(Vec(-h * W), p));
  const Vec ad = (cp - cm) / (2.0 * h);
  return m.push_frame(p, ad);
}

double killing_residual(const GroupModel& m, const VectorField& V, const std::vector<Vec>& sample,
                        double step) {
  if (sample.empty()) throw std::invalid_argument("killing_residual: empty sample");
  const int d = m.dim();
  const double delta = 1e-5;  // spatial step for the flow differential
  const int substeps = 4;

  auto flow = [&](Vec q, double eps) {
    for (int s = 0; s < substeps; ++s) q += (eps / substeps) * V(q);
    return q;
  };

  double worst = 0.0;
  for (const Vec& p : sample) {
    Mat pullback[2];
    for (int side = 0; side < 2; ++side) {
      const double eps = side == 0 ? step : -step;
      Mat jac(d, d);
      for (int a = 0; a < d; ++a) {
        Vec dp = Vec::Zero(d);
        dp[a] = delta;
        jac.col(a) = (flow(p + dp, eps) - flow(p - dp, eps)) / (2.0 * delta);
      }
      const Mat gq = m.metric_at(flow(p, eps));
      pullback[side] = jac.transpose() * gq * jac;
    }
    const Mat lie = (pullback[0] - pullback[1]) / (2.0 * step);
    const Mat f = m.frame(p);
    worst = std::max(worst, (f.transpose() * lie * f).norm());
  }
  return worst;
}

}  // namespace solvmcf
