#pragma once

#include <Eigen/Core>

#include "duel/payoff.hpp"
#include "duel/tgrid.hpp"

namespace duel {

/// Equilibrium values v(mu,nu) for every state up to (m,n).
/// v1/v2 are (m+1) x (n+1) with row mu, column nu; state (0,0) is (0,0).
struct ValueTable {
  int m = 0;
  int n = 0;
  Eigen::MatrixXd v1;
  Eigen::MatrixXd v2;

  double v(int player, int mu, int nu) const {
    return player == 1 ? v1(mu, nu) : v2(mu, nu);
  }
};

/// Closed-form value table from the grid's survival products:
///   v1 = A1 - (A1+B1) prod_i (1 - P1(t(i,nu)))
///      = (A1+B1) prod_j (1 - P2(t(mu,j))) - B1,
/// and the mirrored pair for v2. Both product forms are computed and must
/// agree within cross_tol (the grid balance equation restated); throws
/// SolverError otherwise.
ValueTable value_closed(const DuelSpec& spec, const TGrid& grid,
                        double cross_tol = 1e-10);

/// Value table rebuilt four ways by one-step recurrences (v1 stepping mu,
/// v1 stepping nu, v2 stepping nu, v2 stepping mu), cross-checked against
/// each other and against the closed form.
struct RecurrenceResult {
  ValueTable table;
  double max_disagreement = 0.0;  // worst spread across the five paths
};

RecurrenceResult value_recurrence(const DuelSpec& spec, const TGrid& grid);

/// Parameters of the epsilon-equilibrium construction: the payoff-scale
/// factor lambda and per-state interval lengths delta(mu,nu) satisfying
///   t(mu,nu) + delta < min(t(mu-1,nu), t(mu,nu-1))
///   P_j(t(mu,nu) + delta) < P_j(t(mu,nu)) + lambda * epsilon, j = 1,2.
struct EpsilonParams {
  double epsilon = 0.0;
  double lambda = 0.0;
  Eigen::MatrixXd delta;  // (m+1) x (n+1); valid for mu,nu >= 1

  double delta_at(int mu, int nu) const { return delta(mu, nu); }
};

/// A per-state distribution over the next action time.
///
/// At state (mu,nu) = (Player I units, Player II units) with both counts
/// positive the action time is uniform on [lo(mu,nu), hi(mu,nu)]; a
/// zero-width support is a point mass. When the opponent is out of
/// resource the owner defers to t=1.
struct BehavioralStrategy {
  int player = 1;  // whose action times this prescribes
  int m = 0;
  int n = 0;
  Eigen::MatrixXd lo;  // (m+1) x (n+1); valid for mu,nu >= 1
  Eigen::MatrixXd hi;

  /// Point-mass strategy acting at the same time in every state.
  static BehavioralStrategy point(int player, int m, int n, double time);
};

BehavioralStrategy flipped(const BehavioralStrategy& s);

struct EpsilonStrategyResult {
  BehavioralStrategy x;  // Player I
  BehavioralStrategy y;  // Player II
  EpsilonParams params;
};

/// Builds the epsilon-equilibrium strategies: uniform distributions on
/// [t(mu,nu), t(mu,nu)+delta(mu,nu)], with delta found per state as the
/// largest power-of-two fraction of the monotonicity corridor that keeps
/// both players' accuracy gain below lambda * epsilon.
EpsilonStrategyResult epsilon_strategy(const DuelSpec& spec, const TGrid& grid,
                                       double epsilon);

}  // namespace duel
