#pragma once

#include <Eigen/Core>
#include <string>

#include "duel/accuracy.hpp"

namespace duel {

/// A two-player duel instance: resource counts, the profit vector A, the
/// loss vector B (A_j >= 0, B_j >= 0, A_j + B_j > 0), and both players'
/// effectiveness functions.
struct DuelSpec {
  int m = 1;
  int n = 1;
  Eigen::Vector2d A{1.0, 1.0};
  Eigen::Vector2d B{1.0, 1.0};
  AccuracyProfile p1 = AccuracyProfile::power(1.0);
  AccuracyProfile p2 = AccuracyProfile::power(1.0);

  bool antagonistic() const { return A[0] == B[1] && A[1] == B[0]; }
};

/// Throws std::invalid_argument if the payoff constraints or profiles are
/// invalid.
void require_valid(const DuelSpec& spec);

/// Swaps the players' roles: resources, payoff vectors and profiles.
DuelSpec flipped(const DuelSpec& spec);

/// A realized pair of action-time vectors.
///
/// tau[k-1] is the time at which Player I fires the shot taken with k
/// units remaining, so tau is nonincreasing and tau[m-1] is the first
/// action chronologically. Same for eta with Player II's n units.
struct Play {
  Eigen::VectorXd tau;
  Eigen::VectorXd eta;

  double tau_at(int k) const { return tau[k - 1]; }
  double eta_at(int l) const { return eta[l - 1]; }
};

Play flipped(const Play& play);

/// Checks dimensions against the spec and the nonincreasing-time ordering;
/// throws std::invalid_argument on violation.
void require_valid(const DuelSpec& spec, const Play& play);

struct PayoffVector {
  double k1 = 0.0;
  double k2 = 0.0;
};

struct OutcomeDistribution {
  double q0 = 0.0;  // nobody succeeds
  double q1 = 0.0;  // Player I succeeds
  double q2 = 0.0;  // Player II succeeds
  double q3 = 0.0;  // simultaneous success
  double sum() const { return q0 + q1 + q2 + q3; }
};

/// Expected payoffs of a play, by the three-branch recursion on who fires
/// next (strictly earlier actor / simultaneous / later actor). A player
/// who outlasts the opponent's resource is credited with a certain final
/// success, matching the convention that the survivor defers to t=1.
PayoffVector evaluate(const DuelSpec& spec, const Play& play);

/// Probabilities of the four duel outcomes for a play; same recursion as
/// evaluate at the probability level.
OutcomeDistribution outcome_distribution(const DuelSpec& spec,
                                         const Play& play);

struct ConsistencyReport {
  bool pass = true;
  double err1 = 0.0;  // |K1 - (A1 Q1 - B1 Q2)|
  double err2 = 0.0;  // |K2 - (A2 Q2 - B2 Q1)|
  double tolerance = 1e-12;
};

/// Cross-checks evaluate against outcome_distribution through the
/// expectation identities K1 = A1 Q1 - B1 Q2 and K2 = A2 Q2 - B2 Q1.
ConsistencyReport check_consistency(const DuelSpec& spec, const Play& play);

}  // namespace duel
