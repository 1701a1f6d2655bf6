#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "duel/accuracy.hpp"

namespace duel {

/// Signals a violation of the timing-grid balance equation while solving
/// (no sign change on the bracket, or a nonpositive value at t=0).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The solved timing grid {t(mu,nu)}, mu=1..m, nu=1..n.
///
/// Entry (mu,nu) balances the two players' cumulative survival products:
///   prod_{i<=mu} (1 - P1(t(i,nu))) + prod_{j<=nu} (1 - P2(t(mu,j))) = 1,
/// with the boundary convention t(0,nu) = t(mu,0) = 1. Entries decrease
/// strictly in both indices. Treat as immutable after solving.
struct TGrid {
  int m = 0;
  int n = 0;
  Eigen::MatrixXd t;  // m x n, row mu-1, col nu-1
  double tol = 0.0;   // |balance residual| bound used by the solver

  /// Grid value with the boundary convention (1 on either axis).
  double at(int mu, int nu) const {
    if (mu < 0 || nu < 0 || mu > m || nu > n) {
      throw std::out_of_range("TGrid index outside solved range");
    }
    if (mu == 0 || nu == 0) return 1.0;
    return t(mu - 1, nu - 1);
  }
};

/// Solves the grid by anti-diagonal sweeps of 1-D bisection.
///
/// For each (mu,nu) the remaining unknown appears in both products, so with
///   a = prod_{i<mu} (1 - P1(t(i,nu))),  b = prod_{j<nu} (1 - P2(t(mu,j)))
/// the entry is the unique root of
///   G(t) = a (1 - P1(t)) + b (1 - P2(t)) - 1
/// on (0, min(t(mu-1,nu), t(mu,nu-1))). G is strictly decreasing; a sign
/// change is asserted before bisecting and SolverError is thrown otherwise.
/// Bisection runs to an interval width of tol/100 and returns the visited
/// midpoint with the smallest |G|; |G| <= tol is then verified.
TGrid solve_grid(const AccuracyProfile& p1, const AccuracyProfile& p2, int m,
                 int n, double tol = 1e-12);

/// Max |balance residual| over all entries, re-evaluated from scratch.
double residual(const TGrid& grid, const AccuracyProfile& p1,
                const AccuracyProfile& p2);

}  // namespace duel
