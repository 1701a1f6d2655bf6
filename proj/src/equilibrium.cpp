#include "duel/equilibrium.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace duel {

namespace {

void require_grid_covers(const DuelSpec& spec, const TGrid& grid) {
  if (grid.m < spec.m || grid.n < spec.n || grid.t.rows() != grid.m ||
      grid.t.cols() != grid.n) {
    throw std::invalid_argument("grid does not cover the spec's state space");
  }
}

}  // namespace

ValueTable value_closed(const DuelSpec& spec, const TGrid& grid,
                        double cross_tol) {
  require_grid_covers(spec, grid);
  const int m = spec.m, n = spec.n;
  const double a1 = spec.A[0], b1 = spec.B[0];
  const double a2 = spec.A[1], b2 = spec.B[1];

  ValueTable table;
  table.m = m;
  table.n = n;
  table.v1.setZero(m + 1, n + 1);
  table.v2.setZero(m + 1, n + 1);

  // surv1(mu,nu) = prod_{i<=mu} (1 - P1(t(i,nu))), surv2 mirrored.
  Eigen::MatrixXd surv1 = Eigen::MatrixXd::Ones(m + 1, n + 1);
  Eigen::MatrixXd surv2 = Eigen::MatrixXd::Ones(m + 1, n + 1);
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      surv1(mu, nu) = surv1(mu - 1, nu) * (1.0 - spec.p1(grid.at(mu, nu)));
      surv2(mu, nu) = surv2(mu, nu - 1) * (1.0 - spec.p2(grid.at(mu, nu)));
    }
  // Boundary products pick up a (1 - P(1)) = 0 factor.
  for (int mu = 1; mu <= m; ++mu) surv1(mu, 0) = 0.0;
  for (int nu = 1; nu <= n; ++nu) surv2(0, nu) = 0.0;

  for (int mu = 0; mu <= m; ++mu) {
    for (int nu = 0; nu <= n; ++nu) {
      if (mu == 0 && nu == 0) continue;  // no-resource game is worth (0,0)
      const double v1a = a1 - (a1 + b1) * surv1(mu, nu);
      const double v1b = (a1 + b1) * surv2(mu, nu) - b1;
      const double v2a = (a2 + b2) * surv1(mu, nu) - b2;
      const double v2b = a2 - (a2 + b2) * surv2(mu, nu);
      if (std::abs(v1a - v1b) > cross_tol || std::abs(v2a - v2b) > cross_tol) {
        throw SolverError("product forms disagree at state (" +
                          std::to_string(mu) + "," + std::to_string(nu) +
                          "); grid residual too large");
      }
      table.v1(mu, nu) = v1a;
      table.v2(mu, nu) = v2a;
    }
  }
  return table;
}

RecurrenceResult value_recurrence(const DuelSpec& spec, const TGrid& grid) {
  const ValueTable closed = value_closed(spec, grid);
  const int m = spec.m, n = spec.n;
  const double a1 = spec.A[0], b1 = spec.B[0];
  const double a2 = spec.A[1], b2 = spec.B[1];

  // Four one-step paths: v1 stepping mu / stepping nu, v2 stepping nu /
  // stepping mu. Boundary states carry the decided-game payoffs.
  Eigen::MatrixXd v1m(m + 1, n + 1), v1n(m + 1, n + 1);
  Eigen::MatrixXd v2n(m + 1, n + 1), v2m(m + 1, n + 1);
  for (Eigen::MatrixXd* v : {&v1m, &v1n, &v2n, &v2m}) v->setZero();
  for (int nu = 1; nu <= n; ++nu) {
    v1m(0, nu) = v1n(0, nu) = -b1;
    v2n(0, nu) = v2m(0, nu) = a2;
  }
  for (int mu = 1; mu <= m; ++mu) {
    v1m(mu, 0) = v1n(mu, 0) = a1;
    v2n(mu, 0) = v2m(mu, 0) = -b2;
  }
  for (int mu = 1; mu <= m; ++mu) {
    for (int nu = 1; nu <= n; ++nu) {
      const double q1 = spec.p1(grid.at(mu, nu));
      const double q2 = spec.p2(grid.at(mu, nu));
      v1m(mu, nu) = a1 * q1 + (1.0 - q1) * v1m(mu - 1, nu);
      v1n(mu, nu) = -b1 * q2 + (1.0 - q2) * v1n(mu, nu - 1);
      v2n(mu, nu) = a2 * q2 + (1.0 - q2) * v2n(mu, nu - 1);
      v2m(mu, nu) = -b2 * q1 + (1.0 - q1) * v2m(mu - 1, nu);
    }
  }

  RecurrenceResult result;
  result.table = closed;
  double worst = 0.0;
  for (int mu = 0; mu <= m; ++mu) {
    for (int nu = 0; nu <= n; ++nu) {
      worst = std::max(worst, std::abs(v1m(mu, nu) - v1n(mu, nu)));
      worst = std::max(worst, std::abs(v1m(mu, nu) - closed.v1(mu, nu)));
      worst = std::max(worst, std::abs(v2n(mu, nu) - v2m(mu, nu)));
      worst = std::max(worst, std::abs(v2n(mu, nu) - closed.v2(mu, nu)));
    }
  }
  result.max_disagreement = worst;
  return result;
}

BehavioralStrategy BehavioralStrategy::point(int player, int m, int n,
                                             double time) {
  BehavioralStrategy s;
  s.player = player;
  s.m = m;
  s.n = n;
  s.lo = Eigen::MatrixXd::Constant(m + 1, n + 1, time);
  s.hi = s.lo;
  return s;
}

BehavioralStrategy flipped(const BehavioralStrategy& s) {
  BehavioralStrategy f;
  f.player = 3 - s.player;
  f.m = s.n;
  f.n = s.m;
  f.lo = s.lo.transpose();
  f.hi = s.hi.transpose();
  return f;
}

EpsilonStrategyResult epsilon_strategy(const DuelSpec& spec, const TGrid& grid,
                                       double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  require_grid_covers(spec, grid);
  const int m = spec.m, n = spec.n;

  EpsilonParams params;
  params.epsilon = epsilon;
  params.lambda = std::min(1.0 / (spec.A[0] + spec.B[0]),
                           1.0 / (spec.A[1] + spec.B[1])) /
                  2.0;
  params.delta = Eigen::MatrixXd::Zero(m + 1, n + 1);

  const double gain_cap = params.lambda * epsilon;
  for (int mu = 1; mu <= m; ++mu) {
    for (int nu = 1; nu <= n; ++nu) {
      const double t = grid.at(mu, nu);
      const double corridor =
          std::min(grid.at(mu - 1, nu), grid.at(mu, nu - 1)) - t;
      double delta = corridor / 2.0;
      bool ok = false;
      for (int iter = 0; iter < 200; ++iter) {
        if (spec.p1(t + delta) < spec.p1(t) + gain_cap &&
            spec.p2(t + delta) < spec.p2(t) + gain_cap) {
          ok = true;
          break;
        }
        delta /= 2.0;
      }
      if (!ok || !(delta > 0.0)) {
        throw SolverError("no admissible interval length at state (" +
                          std::to_string(mu) + "," + std::to_string(nu) + ")");
      }
      params.delta(mu, nu) = delta;
    }
  }

  BehavioralStrategy x;
  x.player = 1;
  x.m = m;
  x.n = n;
  x.lo = Eigen::MatrixXd::Zero(m + 1, n + 1);
  x.hi = Eigen::MatrixXd::Zero(m + 1, n + 1);
  for (int mu = 1; mu <= m; ++mu)
    for (int nu = 1; nu <= n; ++nu) {
      x.lo(mu, nu) = grid.at(mu, nu);
      x.hi(mu, nu) = grid.at(mu, nu) + params.delta(mu, nu);
    }
  BehavioralStrategy y = x;
  y.player = 2;
  return {std::move(x), std::move(y), std::move(params)};
}

}  // namespace duel
