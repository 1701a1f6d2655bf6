#include "duel/payoff.hpp"

#include <cmath>
#include <stdexcept>

namespace duel {

void require_valid(const DuelSpec& spec) {
  if (spec.m < 0 || spec.n < 0) {
    throw std::invalid_argument("resource counts must be nonnegative");
  }
  for (int j = 0; j < 2; ++j) {
    if (!(spec.A[j] >= 0.0) || !(spec.B[j] >= 0.0) ||
        !(spec.A[j] + spec.B[j] > 0.0)) {
      throw std::invalid_argument(
          "payoff constants must satisfy A_j >= 0, B_j >= 0, A_j + B_j > 0");
    }
  }
  require_valid(spec.p1);
  require_valid(spec.p2);
}

DuelSpec flipped(const DuelSpec& spec) {
  DuelSpec f = spec;
  std::swap(f.m, f.n);
  std::swap(f.A[0], f.A[1]);
  std::swap(f.B[0], f.B[1]);
  std::swap(f.p1, f.p2);
  return f;
}

Play flipped(const Play& play) { return Play{play.eta, play.tau}; }

void require_valid(const DuelSpec& spec, const Play& play) {
  if (play.tau.size() != spec.m || play.eta.size() != spec.n) {
    throw std::invalid_argument("play dimensions do not match the spec");
  }
  auto check_ordered = [](const Eigen::VectorXd& v, const char* name) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (!(v[i] >= 0.0 && v[i] <= 1.0)) {
        throw std::invalid_argument(std::string(name) +
                                    " entry outside [0,1]");
      }
      if (i > 0 && v[i] > v[i - 1]) {
        throw std::invalid_argument(std::string(name) +
                                    " must be nonincreasing in the index");
      }
    }
  };
  check_ordered(play.tau, "tau");
  check_ordered(play.eta, "eta");
}

namespace {

// K1 and K2 recursions share one shape; Player II's payoff is the mirror
// of Player I's with every role swapped.
PayoffVector eval_rec(const DuelSpec& s, const Play& p, int k, int l) {
  if (k == 0 && l == 0) return {0.0, 0.0};
  if (l == 0) return {s.A[0], -s.B[1]};
  if (k == 0) return {-s.B[0], s.A[1]};

  const double tk = p.tau_at(k);
  const double el = p.eta_at(l);
  if (tk < el) {
    const double q1 = s.p1(tk);
    const PayoffVector sub = eval_rec(s, p, k - 1, l);
    return {s.A[0] * q1 + (1.0 - q1) * sub.k1,
            -s.B[1] * q1 + (1.0 - q1) * sub.k2};
  }
  if (el < tk) {
    const double q2 = s.p2(el);
    const PayoffVector sub = eval_rec(s, p, k, l - 1);
    return {-s.B[0] * q2 + (1.0 - q2) * sub.k1,
            s.A[1] * q2 + (1.0 - q2) * sub.k2};
  }
  const double q1 = s.p1(tk);
  const double q2 = s.p2(tk);
  const PayoffVector sub = eval_rec(s, p, k - 1, l - 1);
  const double both_miss = (1.0 - q1) * (1.0 - q2);
  return {s.A[0] * q1 * (1.0 - q2) - s.B[0] * (1.0 - q1) * q2 +
              both_miss * sub.k1,
          s.A[1] * q2 * (1.0 - q1) - s.B[1] * (1.0 - q2) * q1 +
              both_miss * sub.k2};
}

void outcome_rec(const DuelSpec& s, const Play& p, int k, int l, double mass,
                 OutcomeDistribution& out) {
  if (k == 0 && l == 0) {
    out.q0 += mass;
    return;
  }
  if (l == 0) {  // survivor's deferred shot at t=1 succeeds surely
    out.q1 += mass;
    return;
  }
  if (k == 0) {
    out.q2 += mass;
    return;
  }
  const double tk = p.tau_at(k);
  const double el = p.eta_at(l);
  if (tk < el) {
    const double q1 = s.p1(tk);
    out.q1 += mass * q1;
    outcome_rec(s, p, k - 1, l, mass * (1.0 - q1), out);
  } else if (el < tk) {
    const double q2 = s.p2(el);
    out.q2 += mass * q2;
    outcome_rec(s, p, k, l - 1, mass * (1.0 - q2), out);
  } else {
    const double q1 = s.p1(tk);
    const double q2 = s.p2(tk);
    out.q3 += mass * q1 * q2;
    out.q1 += mass * q1 * (1.0 - q2);
    out.q2 += mass * q2 * (1.0 - q1);
    outcome_rec(s, p, k - 1, l - 1, mass * (1.0 - q1) * (1.0 - q2), out);
  }
}

}  // namespace

PayoffVector evaluate(const DuelSpec& spec, const Play& play) {
  require_valid(spec, play);
  return eval_rec(spec, play, spec.m, spec.n);
}

OutcomeDistribution outcome_distribution(const DuelSpec& spec,
                                         const Play& play) {
  require_valid(spec, play);
  OutcomeDistribution out;
  outcome_rec(spec, play, spec.m, spec.n, 1.0, out);
  return out;
}

ConsistencyReport check_consistency(const DuelSpec& spec, const Play& play) {
  const PayoffVector k = evaluate(spec, play);
  const OutcomeDistribution q = outcome_distribution(spec, play);
  ConsistencyReport r;
  r.err1 = std::abs(k.k1 - (spec.A[0] * q.q1 - spec.B[0] * q.q2));
  r.err2 = std::abs(k.k2 - (spec.A[1] * q.q2 - spec.B[1] * q.q1));
  r.pass = r.err1 <= r.tolerance && r.err2 <= r.tolerance;
  return r;
}

}  // namespace duel
