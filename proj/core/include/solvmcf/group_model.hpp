#pragma once

#include <string>

#include "solvmcf/lie_algebra.hpp"

namespace solvmcf {

enum class Family { S3Lambda, S3LambdaPair, S3Prime, G4 };

/// Concrete coordinate model of a group: closed-form product, inverse,
/// left-invariant frame and the coordinate metric tensor making the frame
/// orthonormal. Points are coordinate vectors, (x,y,z) for the 3d families
/// and (s,x,y,z) for G4; the identity is the zero tuple.
///
/// Stateless evaluators; safe for concurrent use.
class GroupModel {
public:
  /// Defaults to the Heisenberg model, the lambda = 0 member of S3_lambda.
  GroupModel() : GroupModel(Family::S3Lambda, 0.0) {}
  explicit GroupModel(Family family, double l1 = 0.0, double l2 = 0.0);

  Family family() const { return family_; }
  int dim() const { return family_ == Family::G4 ? 4 : 3; }
  double l1() const { return l1_; }
  double l2() const { return l2_; }

  /// Canonical model-spec string, e.g. "s3ll:l1=1,l2=0".
  std::string spec_string() const;
  /// The matching catalogue algebra (r3[l], r3[l1,l2], r3p[l] or g4).
  LieAlgebra algebra() const;

  Vec identity() const { return Vec::Zero(dim()); }
  Vec multiply(const Vec& p, const Vec& q) const;
  Vec inverse(const Vec& p) const;
  /// Column i holds the coordinate components of the left-invariant field E_i at p.
  Mat frame(const Vec& p) const;
  /// Coordinate metric tensor at p; satisfies frame(p)^T G frame(p) = I.
  Mat metric_at(const Vec& p) const;

  /// Frame coefficients of a coordinate tangent vector at p: frame(p)^{-1} v.
  Vec frame_coeffs(const Vec& p, const Vec& v) const;
  /// Coordinate components of a frame-coefficient vector at p: frame(p) a.
  Vec push_frame(const Vec& p, const Vec& a) const;

private:
  void require_point(const Vec& p, const char* who) const;

  Family family_;
  double l1_, l2_;
};

/// Parse a model spec string:
///   "s3l:lambda=<v>", "s3ll:l1=<v>,l2=<v>", "s3p:lambda=<v>", "g4",
///   "h3" (alias for s3l:lambda=0).
/// Throws std::invalid_argument on malformed specs.
GroupModel parse_model(const std::string& spec);

/// Algebra from a spec that may be a model spec or one of the algebra-only
/// keys "sl2", "su2", "h3".
LieAlgebra make_algebra_from_spec(const std::string& spec);

}  // namespace solvmcf
