#include "solvmcf/group_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace solvmcf {

GroupModel::GroupModel(Family family, double l1, double l2) : family_(family), l1_(l1), l2_(l2) {
  if (family_ == Family::S3LambdaPair && std::abs(l1_) < 1e-15)
    throw std::invalid_argument("GroupModel: S3_{l1,l2} requires lambda1 != 0");
}

std::string GroupModel::spec_string() const {
  std::ostringstream os;
  switch (family_) {
    case Family::S3Lambda: os << "s3l:lambda=" << l1_; break;
    case Family::S3LambdaPair: os << "s3ll:l1=" << l1_ << ",l2=" << l2_; break;
    case Family::S3Prime: os << "s3p:lambda=" << l1_; break;
    case Family::G4: os << "g4"; break;
  }
  return os.str();
}

LieAlgebra GroupModel::algebra() const {
  switch (family_) {
    case Family::S3Lambda: return make_algebra("r3[l]", {l1_});
    case Family::S3LambdaPair: return make_algebra("r3[l1,l2]", {l1_, l2_});
    case Family::S3Prime: return make_algebra("r3p[l]", {l1_});
    case Family::G4: return make_algebra("g4");
  }
  throw std::logic_error("GroupModel::algebra: bad family");
}

void GroupModel::require_point(const Vec& p, const char* who) const {
  if (p.size() != dim()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

Vec GroupModel::multiply(const Vec& p, const Vec& q) const {
  require_point(p, "multiply");
  require_point(q, "multiply");
  Vec r(dim());
  switch (family_) {
    case Family::S3Lambda: {
      const double e = std::exp(l1_ * p[2]);
      r[0] = p[0] + e * (q[0] + p[2] * q[1]);
      r[1] = p[1] + e * q[1];
      r[2] = p[2] + q[2];
      break;
    }
    case Family::S3LambdaPair: {
      r[0] = p[0] + std::exp(l1_ * p[2]) * q[0];
      r[1] = p[1] + std::exp(l2_ * p[2]) * q[1];
      r[2] = p[2] + q[2];
      break;
    }
    case Family::S3Prime: {
      const double e = std::exp(l1_ * p[2]);
      const double c = std::cos(p[2]), s = std::sin(p[2]);
      r[0] = p[0] + e * (c * q[0] + s * q[1]);
      r[1] = p[1] + e * (-s * q[0] + c * q[1]);
      r[2] = p[2] + q[2];
      break;
    }
    case Family::G4: {
      const double eh = std::exp(p[0] / 2.0), ef = std::exp(p[0]);
      r[0] = p[0] + q[0];
      r[1] = p[1] + eh * q[1];
      r[2] = p[2] + eh * q[2];
      r[3] = p[3] + ef * q[3] + eh * (p[1] * q[2] - q[1] * p[2]) / 2.0;
      break;
    }
  }
  return r;
}

Vec GroupModel::inverse(const Vec& p) const {
  require_point(p, "inverse");
  Vec r(dim());
  switch (family_) {
    case Family::S3Lambda: {
      const double e = std::exp(-l1_ * p[2]);
      r[0] = -e * (p[0] - p[2] * p[1]);
      r[1] = -e * p[1];
      r[2] = -p[2];
      break;
    }
    case Family::S3LambdaPair: {
      r[0] = -std::exp(-l1_ * p[2]) * p[0];
      r[1] = -std::exp(-l2_ * p[2]) * p[1];
      r[2] = -p[2];
      break;
    }
    case Family::S3Prime: {
      const double e = std::exp(-l1_ * p[2]);
      const double c = std::cos(p[2]), s = std::sin(p[2]);
      // R_{l,z}^{-1} = e^{-lz} [[c,-s],[s,c]]
      r[0] = -e * (c * p[0] - s * p[1]);
      r[1] = -e * (s * p[0] + c * p[1]);
      r[2] = -p[2];
      break;
    }
    case Family::G4: {
      const double eh = std::exp(-p[0] / 2.0), ef = std::exp(-p[0]);
      r[0] = -p[0];
      r[1] = -eh * p[1];
      r[2] = -eh * p[2];
      r[3] = -ef * p[3];
      break;
    }
  }
  return r;
}

Mat GroupModel::frame(const Vec& p) const {
  require_point(p, "frame");
  Mat f = Mat::Zero(dim(), dim());
  switch (family_) {
    case Family::S3Lambda: {
      const double e = std::exp(l1_ * p[2]);
      f(0, 0) = e;
      f(0, 1) = p[2] * e;
      f(1, 1) = e;
      f(2, 2) = 1.0;
      break;
    }
    case Family::S3LambdaPair: {
      f(0, 0) = std::exp(l1_ * p[2]);
      f(1, 1) = std::exp(l2_ * p[2]);
      f(2, 2) = 1.0;
      break;
    }
    case Family::S3Prime: {
      const double e = std::exp(l1_ * p[2]);
      const double c = std::cos(p[2]), s = std::sin(p[2]);
      f(0, 0) = e * c;
      f(1, 0) = -e * s;
      f(0, 1) = e * s;
      f(1, 1) = e * c;
      f(2, 2) = 1.0;
      break;
    }
    case Family::G4: {
      const double eh = std::exp(p[0] / 2.0), ef = std::exp(p[0]);
      f(0, 0) = 1.0;
      f(1, 1) = eh;
      f(3, 1) = -p[2] / 2.0 * eh;
      f(2, 2) = eh;
      f(3, 2) = p[1] / 2.0 * eh;
      f(3, 3) = ef;
      break;
    }
  }
  return f;
}

Mat GroupModel::metric_at(const Vec& p) const {
  require_point(p, "metric_at");
  Mat g = Mat::Zero(dim(), dim());
  switch (family_) {
    case Family::S3Lambda: {
      // e^{-2lz} dx^2 + (1+z^2) e^{-2lz} dy^2 + dz^2 with g_xy = -z e^{-2lz},
      // the symmetric tensor that makes the frame orthonormal.
      const double e2 = std::exp(-2.0 * l1_ * p[2]);
      const double z = p[2];
      g(0, 0) = e2;
      g(0, 1) = g(1, 0) = -z * e2;
      g(1, 1) = (1.0 + z * z) * e2;
      g(2, 2) = 1.0;
      break;
    }
    case Family::S3LambdaPair: {
      g(0, 0) = std::exp(-2.0 * l1_ * p[2]);
      g(1, 1) = std::exp(-2.0 * l2_ * p[2]);
      g(2, 2) = 1.0;
      break;
    }
    case Family::S3Prime: {
      const double e2 = std::exp(-2.0 * l1_ * p[2]);
      g(0, 0) = e2;
      g(1, 1) = e2;
      g(2, 2) = 1.0;
      break;
    }
    case Family::G4: {
      const double x = p[1], y = p[2];
      const double em = std::exp(-p[0]), em2 = std::exp(-2.0 * p[0]);
      g(0, 0) = 1.0;
      g(1, 1) = em + y * y / 4.0 * em2;
      g(2, 2) = em + x * x / 4.0 * em2;
      g(3, 3) = em2;
      g(1, 2) = g(2, 1) = -x * y / 4.0 * em2;
      g(1, 3) = g(3, 1) = y / 2.0 * em2;
      g(2, 3) = g(3, 2) = -x / 2.0 * em2;
      break;
    }
  }
  return g;
}

Vec GroupModel::frame_coeffs(const Vec& p, const Vec& v) const {
  require_point(v, "frame_coeffs");
  return frame(p).partialPivLu().solve(v);
}

Vec GroupModel::push_frame(const Vec& p, const Vec& a) const {
  require_point(a, "push_frame");
  return frame(p) * a;
}

namespace {

double parse_number(const std::string& s, const std::string& spec) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("parse_model: bad number '" + s + "' in '" + spec + "'");
  }
}

}  // namespace

GroupModel parse_model(const std::string& spec) {
  if (spec == "g4") return GroupModel(Family::G4);
  if (spec == "h3") return GroupModel(Family::S3Lambda, 0.0);

  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("parse_model: expected '<family>:<k=v,...>' in '" + spec + "'");
  const std::string head = spec.substr(0, colon);

  // parse k=v pairs
  std::vector<std::pair<std::string, double>> kv;
  std::string rest = spec.substr(colon + 1);
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("parse_model: expected k=v in '" + spec + "'");
    kv.emplace_back(item.substr(0, eq), parse_number(item.substr(eq + 1), spec));
  }
  auto get = [&](const std::string& k) -> double {
    for (auto& [key, v] : kv)
      if (key == k) return v;
    throw std::invalid_argument("parse_model: missing parameter '" + k + "' in '" + spec + "'");
  };

  if (head == "s3l") return GroupModel(Family::S3Lambda, get("lambda"));
  if (head == "s3ll") return GroupModel(Family::S3LambdaPair, get("l1"), get("l2"));
  if (head == "s3p") return GroupModel(Family::S3Prime, get("lambda"));
  throw std::invalid_argument("parse_model: unknown family '" + head + "' in '" + spec + "'");
}

LieAlgebra make_algebra_from_spec(const std::string& spec) {
  if (spec == "sl2" || spec == "su2" || spec == "h3") return make_algebra(spec);
  return parse_model(spec).algebra();
}

}  // namespace solvmcf
