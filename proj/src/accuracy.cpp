#include "duel/accuracy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace duel {

AccuracyProfile AccuracyProfile::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw std::invalid_argument("power profile requires exponent k > 0");
  }
  AccuracyProfile p;
  p.kind_ = Kind::Power;
  p.exponent_ = exponent;
  return p;
}

AccuracyProfile AccuracyProfile::piecewise_linear(Eigen::VectorXd knot_times,
                                                  Eigen::VectorXd knot_values) {
  if (knot_times.size() != knot_values.size() || knot_times.size() < 2) {
    throw std::invalid_argument("piecewise profile needs >= 2 matched knots");
  }
  AccuracyProfile p;
  p.kind_ = Kind::PiecewiseLinear;
  p.knot_t_ = std::move(knot_times);
  p.knot_p_ = std::move(knot_values);
  return p;
}

AccuracyProfile AccuracyProfile::tabulated(Eigen::VectorXd values) {
  const Eigen::Index n = values.size();
  if (n < 2) {
    throw std::invalid_argument("tabulated profile needs >= 2 samples");
  }
  AccuracyProfile p;
  p.kind_ = Kind::Tabulated;
  p.knot_t_ = Eigen::VectorXd::LinSpaced(n, 0.0, 1.0);
  p.knot_p_ = std::move(values);
  return p;
}

double AccuracyProfile::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("accuracy profile evaluated outside [0,1]");
  }
  if (kind_ == Kind::Power) {
    return std::pow(t, exponent_);
  }
  // Linear interpolation; knots are strictly increasing in time.
  const Eigen::VectorXd& kt = knot_t_;
  const Eigen::VectorXd& kp = knot_p_;
  if (t <= kt[0]) return kp[0];
  const Eigen::Index n = kt.size();
  if (t >= kt[n - 1]) return kp[n - 1];
  Eigen::Index lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const Eigen::Index mid = (lo + hi) / 2;
    (kt[mid] <= t ? lo : hi) = mid;
  }
  const double w = (t - kt[lo]) / (kt[lo + 1] - kt[lo]);
  return kp[lo] + w * (kp[lo + 1] - kp[lo]);
}

std::string AccuracyProfile::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Power:
      os << "power(k=" << exponent_ << ")";
      break;
    case Kind::PiecewiseLinear:
      os << "piecewise-linear(" << knot_t_.size() << " knots)";
      break;
    case Kind::Tabulated:
      os << "tabulated(" << knot_p_.size() << " samples)";
      break;
  }
  return os.str();
}

ValidationReport validate(const AccuracyProfile& profile, int grid_points) {
  ValidationReport report;
  report.grid_points = grid_points;
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.failures.push_back(msg);
  };

  if (profile(0.0) != 0.0) fail("P(0) != 0");
  if (profile(1.0) != 1.0) fail("P(1) != 1");

  // Sample points: dense uniform grid plus every knot.
  std::vector<double> ts;
  ts.reserve(static_cast<size_t>(grid_points) + 16);
  for (int i = 0; i < grid_points; ++i) {
    ts.push_back(static_cast<double>(i) / (grid_points - 1));
  }
  if (profile.kind() != AccuracyProfile::Kind::Power) {
    for (Eigen::Index i = 0; i < profile.knot_times().size(); ++i) {
      ts.push_back(profile.knot_times()[i]);
    }
    std::sort(ts.begin(), ts.end());
  }

  bool monotone = true, in_range = true;
  double prev_t = ts[0], prev_p = profile(ts[0]);
  for (size_t i = 1; i < ts.size(); ++i) {
    const double t = ts[i];
    if (t == prev_t) continue;
    const double p = profile(t);
    if (!(p > prev_p)) monotone = false;
    if (t > 0.0 && t < 1.0 && !(p > 0.0 && p < 1.0)) in_range = false;
    prev_t = t;
    prev_p = p;
  }
  if (!monotone) fail("not strictly increasing on the sample grid");
  if (!in_range) fail("P(t) outside (0,1) for interior t");
  return report;
}

void require_valid(const AccuracyProfile& profile) {
  const ValidationReport r = validate(profile);
  if (!r.pass) {
    std::string msg = "invalid accuracy profile " + profile.describe() + ":";
    for (const auto& f : r.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
  }
}

}  // namespace duel
