#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "duel/equilibrium.hpp"
#include "duel/payoff.hpp"
#include "duel/tgrid.hpp"

namespace duel {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// A contingent pure plan: one planned next-action time per state
/// (mu,nu) = (Player I units, Player II units). Entries default to 1.
struct PurePlan {
  int player = 1;
  int m = 0;
  int n = 0;
  Eigen::MatrixXd at;  // (m+1) x (n+1) planned times in [0,1]

  static PurePlan constant(int player, int m, int n, double time = 1.0);
};

PurePlan flipped(const PurePlan& plan);

/// What a side plays: a behavioral strategy or a pure contingent plan.
using Policy = std::variant<BehavioralStrategy, PurePlan>;

Policy flipped(const Policy& policy);

/// Event-driven realization of one play. At each state both sides produce
/// a next time: behavioral sides draw from the state's distribution
/// conditioned on [max(lo, now), hi] (acting immediately once the support
/// is wholly past), plans act at their planned time clamped to now. The
/// earlier actor fires and its resource decrements; equal times fire both.
/// Hit/miss randomness stays inside payoff evaluation. Identical seeds
/// give identical plays.
Play sample_play(const DuelSpec& spec, const Policy& side1,
                 const Policy& side2, std::uint64_t seed);

struct MonteCarloMethod {
  long samples = 100000;
  std::uint64_t seed = kDefaultSeed;
};

struct QuadratureMethod {
  int nodes = 32;  // Gauss-Legendre nodes per 1-D integral
};

using ExpectationMethod = std::variant<MonteCarloMethod, QuadratureMethod>;

struct PayoffEstimate {
  double k1 = 0.0;
  double k2 = 0.0;
  double se1 = 0.0;  // standard errors; zero for quadrature
  double se2 = 0.0;
  long samples = 0;
  int nodes = 0;
};

/// Mean payoffs under the two sides' timing randomness. Monte Carlo
/// averages evaluate() over sampled plays with per-sample streams derived
/// from (seed, index); quadrature integrates the per-state uniform
/// densities exactly up to node count (requires m + n <= 4).
PayoffEstimate expected_payoff(const DuelSpec& spec, const Policy& side1,
                               const Policy& side2,
                               const ExpectationMethod& method);

struct BestResponse {
  double value = 0.0;
  PurePlan plan;
  double dp_bound = 0.0;  // discretization error estimate (grid halving)
  int grid_points = 0;
};

/// Best deviation payoff against a behavioral opponent, by backward
/// induction over (state, discretized current time). The deviator may
/// re-plan at every state entry time, which upper-bounds time-independent
/// plans; the reported value improves as the grid refines.
BestResponse best_response(const DuelSpec& spec,
                           const BehavioralStrategy& opponent, int for_player,
                           int time_grid = 2000);

struct VerifyBudgets {
  long samples = 100000;
  int grid_points = 2000;
  std::uint64_t seed = kDefaultSeed;
  int max_m = 3;
  int max_n = 3;
  double solve_tol = 1e-12;
  int quadrature_nodes = 32;
};

struct VerificationCheck {
  std::string name;
  bool pass = false;
  double lhs = 0.0;  // checked as lhs <= rhs
  double rhs = 0.0;
};

struct VerificationReport {
  int m = 0;
  int n = 0;
  double epsilon = 0.0;
  double v1 = 0.0, v2 = 0.0;
  double k1_mean = 0.0, k1_stderr = 0.0;
  double k2_mean = 0.0, k2_stderr = 0.0;
  double best_response_1 = 0.0, best_response_2 = 0.0;
  double dp_bound_1 = 0.0, dp_bound_2 = 0.0;
  double maxmin_floor_1 = 0.0, maxmin_floor_2 = 0.0;
  long samples = 0;
  int grid_points = 0;
  std::uint64_t seed = 0;
  std::vector<VerificationCheck> checks;

  bool all_pass() const;
};

/// Checks the equilibrium inequalities for the pair (x,y): each side's
/// best response must not beat its realized mean payoff by more than
/// epsilon plus slack (3 standard errors + the DP bound), and the mean
/// payoffs must sit within epsilon of the equilibrium values.
VerificationReport verify_epsilon_equilibrium(const DuelSpec& spec,
                                              double epsilon,
                                              const BehavioralStrategy& x,
                                              const BehavioralStrategy& y,
                                              const VerifyBudgets& budgets);

/// Same, with (x,y) built by the epsilon-strategy construction.
VerificationReport verify_epsilon_equilibrium(const DuelSpec& spec,
                                              double epsilon,
                                              const VerifyBudgets& budgets);

/// Checks the guarantee floors: the worst-case mean payoff of each
/// epsilon strategy against opponent plans must stay above the
/// equilibrium value minus epsilon and slack.
VerificationReport verify_maxmin(const DuelSpec& spec, double epsilon,
                                 const VerifyBudgets& budgets);

}  // namespace duel
