#include "duel/tgrid.hpp"

#include <cmath>
#include <string>

namespace duel {

namespace {

// Root of G(t) = a(1-P1(t)) + b(1-P2(t)) - 1 on (0, upper).
// Tracks the visited midpoint with the smallest |G|, so tightening tol
// extends the same bisection trajectory and never worsens the residual.
double solve_entry(const AccuracyProfile& p1, const AccuracyProfile& p2,
                   double a, double b, double upper, double tol, int mu,
                   int nu) {
  auto G = [&](double t) { return a * (1.0 - p1(t)) + b * (1.0 - p2(t)) - 1.0; };

  const double g0 = a + b - 1.0;  // G(0), since P(0)=0
  if (g0 <= 0.0) {
    throw SolverError("grid balance violated at (" + std::to_string(mu) + "," +
                      std::to_string(nu) + "): G(0) = " + std::to_string(g0) +
                      " <= 0");
  }
  if (G(upper) >= 0.0) {
    throw SolverError("no sign change on (0, " + std::to_string(upper) +
                      ") at (" + std::to_string(mu) + "," + std::to_string(nu) +
                      ")");
  }

  double lo = 0.0, hi = upper;
  double best_t = 0.5 * upper;
  double best_abs = std::abs(G(best_t));
  const double width_cutoff = tol * 1e-2;
  while (hi - lo > width_cutoff) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // float resolution exhausted
    const double g = G(mid);
    if (std::abs(g) < best_abs) {
      best_abs = std::abs(g);
      best_t = mid;
    }
    if (g > 0.0) {
      lo = mid;
    } else if (g < 0.0) {
      hi = mid;
    } else {
      return mid;
    }
  }
  if (best_abs > tol) {
    throw SolverError("bisection stalled at (" + std::to_string(mu) + "," +
                      std::to_string(nu) +
                      "): residual " + std::to_string(best_abs));
  }
  return best_t;
}

}  // namespace

TGrid solve_grid(const AccuracyProfile& p1, const AccuracyProfile& p2, int m,
                 int n, double tol) {
  if (m < 1 || n < 1) throw std::invalid_argument("solve_grid needs m,n >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_grid needs tol > 0");
  require_valid(p1);
  require_valid(p2);

  TGrid grid;
  grid.m = m;
  grid.n = n;
  grid.tol = tol;
  grid.t.resize(m, n);

  // Survival prefix products over the already-solved entries:
  //   surv1(mu,nu) = prod_{i<=mu} (1 - P1(t(i,nu)))   (down column nu)
  //   surv2(mu,nu) = prod_{j<=nu} (1 - P2(t(mu,j)))   (along row mu)
  Eigen::MatrixXd surv1 = Eigen::MatrixXd::Ones(m + 1, n + 1);
  Eigen::MatrixXd surv2 = Eigen::MatrixXd::Ones(m + 1, n + 1);

  for (int s = 2; s <= m + n; ++s) {
    for (int mu = std::max(1, s - n); mu <= std::min(m, s - 1); ++mu) {
      const int nu = s - mu;
      const double a = surv1(mu - 1, nu);
      const double b = surv2(mu, nu - 1);
      const double upper = std::min(grid.at(mu - 1, nu), grid.at(mu, nu - 1));
      const double root = solve_entry(p1, p2, a, b, upper, tol, mu, nu);
      grid.t(mu - 1, nu - 1) = root;
      surv1(mu, nu) = a * (1.0 - p1(root));
      surv2(mu, nu) = b * (1.0 - p2(root));
    }
  }
  return grid;
}

double residual(const TGrid& grid, const AccuracyProfile& p1,
                const AccuracyProfile& p2) {
  if (grid.m < 1 || grid.n < 1 || grid.t.rows() != grid.m ||
      grid.t.cols() != grid.n) {
    throw std::invalid_argument("residual needs a solved grid");
  }
  Eigen::MatrixXd surv1 = Eigen::MatrixXd::Ones(grid.m + 1, grid.n + 1);
  Eigen::MatrixXd surv2 = Eigen::MatrixXd::Ones(grid.m + 1, grid.n + 1);
  double worst = 0.0;
  for (int mu = 1; mu <= grid.m; ++mu) {
    for (int nu = 1; nu <= grid.n; ++nu) {
      const double t = grid.at(mu, nu);
      surv1(mu, nu) = surv1(mu - 1, nu) * (1.0 - p1(t));
      surv2(mu, nu) = surv2(mu, nu - 1) * (1.0 - p2(t));
      worst = std::max(worst, std::abs(surv1(mu, nu) + surv2(mu, nu) - 1.0));
    }
  }
  return worst;
}

}  // namespace duel
