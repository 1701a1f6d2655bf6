#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace duel {

/// A player's effectiveness function P: [0,1] -> [0,1].
///
/// P is continuous and strictly increasing with P(0)=0, P(1)=1 and
/// 0 < P(t) < 1 on (0,1). Three representations are supported:
///   - power:      P(t) = t^k, k > 0
///   - piecewise:  linear interpolation through explicit (t,p) knots
///   - tabulated:  linear interpolation through values sampled on a
///                 uniform time grid over [0,1] (endpoints included)
/// Immutable after construction; safe for concurrent reads.
class AccuracyProfile {
 public:
  enum class Kind { Power, PiecewiseLinear, Tabulated };

  static AccuracyProfile power(double exponent);
  static AccuracyProfile piecewise_linear(Eigen::VectorXd knot_times,
                                          Eigen::VectorXd knot_values);
  static AccuracyProfile tabulated(Eigen::VectorXd values);

  /// Evaluates P(t). Throws std::domain_error for t outside [0,1].
  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  const Eigen::VectorXd& knot_times() const { return knot_t_; }
  const Eigen::VectorXd& knot_values() const { return knot_p_; }

  std::string describe() const;

 private:
  AccuracyProfile() = default;

  Kind kind_ = Kind::Power;
  double exponent_ = 1.0;
  Eigen::VectorXd knot_t_;  // strictly increasing, knot_t_[0]=0, back()=1
  Eigen::VectorXd knot_p_;
};

inline double eval(const AccuracyProfile& profile, double t) {
  return profile(t);
}

struct ValidationReport {
  bool pass = true;
  int grid_points = 0;
  std::vector<std::string> failures;
};

/// Checks the profile invariants: exact endpoint values, strict
/// monotonicity on a dense grid plus all knots, interior range (0,1).
ValidationReport validate(const AccuracyProfile& profile,
                          int grid_points = 10000);

/// Throws std::invalid_argument when the profile fails validation.
void require_valid(const AccuracyProfile& profile);

}  // namespace duel
