#include "duel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace duel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// Policy plumbing

void require_policy_dims(const DuelSpec& spec, const Policy& policy,
                         int side) {
  const auto check = [&](int player, int m, int n, Eigen::Index rows,
                         Eigen::Index cols) {
    if (player != side || m < spec.m || n < spec.n || rows < spec.m + 1 ||
        cols < spec.n + 1) {
      throw std::invalid_argument("policy does not cover the spec's states");
    }
  };
  if (const auto* s = std::get_if<BehavioralStrategy>(&policy)) {
    check(s->player, s->m, s->n, s->lo.rows(), s->lo.cols());
  } else {
    const auto& p = std::get<PurePlan>(policy);
    check(p.player, p.m, p.n, p.at.rows(), p.at.cols());
  }
}

// Conditional law of a side's next action time at state (mu,nu), given the
// current time. Point laws have a == b.
struct Law {
  bool point = true;
  double a = 1.0;
  double b = 1.0;
};

Law law_of(const Policy& policy, int side, int mu, int nu, double now) {
  const int opp = side == 1 ? nu : mu;
  if (const auto* s = std::get_if<BehavioralStrategy>(&policy)) {
    if (opp == 0) return {true, 1.0, 1.0};
    const double lo = s->lo(mu, nu), hi = s->hi(mu, nu);
    if (now > hi) return {true, now, now};
    const double a = std::max(lo, now);
    if (a >= hi) return {true, hi, hi};
    return {false, a, hi};
  }
  const auto& plan = std::get<PurePlan>(policy);
  const double t = std::max(plan.at(mu, nu), now);
  return {true, t, t};
}

double draw(const Law& law, std::mt19937_64& rng) {
  if (law.point) return law.a;
  return law.a + (law.b - law.a) * uniform01(rng);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes on [-1,1], cached per order.

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussRule& gauss_rule(int n) {
  static std::vector<GaussRule> cache(128);
  if (n < 1 || n >= static_cast<int>(cache.size())) {
    throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
  GaussRule& rule = cache[n];
  if (!rule.x.empty()) return rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[k] = -x;
    rule.x[n - 1 - k] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.w[k] = w;
    rule.w[n - 1 - k] = w;
  }
  return rule;
}

template <typename F>
auto integrate(F&& f, double a, double b, int nodes) -> decltype(f(a)) {
  const GaussRule& rule = gauss_rule(nodes);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  decltype(f(a)) acc = f(mid) * 0.0;
  for (int k = 0; k < nodes; ++k) {
    acc += rule.w[k] * half * f(mid + half * rule.x[k]);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sampling

PurePlan PurePlan::constant(int player, int m, int n, double time) {
  PurePlan p;
  p.player = player;
  p.m = m;
  p.n = n;
  p.at = Eigen::MatrixXd::Constant(m + 1, n + 1, time);
  return p;
}

PurePlan flipped(const PurePlan& plan) {
  PurePlan f;
  f.player = 3 - plan.player;
  f.m = plan.n;
  f.n = plan.m;
  f.at = plan.at.transpose();
  return f;
}

Policy flipped(const Policy& policy) {
  if (const auto* s = std::get_if<BehavioralStrategy>(&policy)) {
    return flipped(*s);
  }
  return flipped(std::get<PurePlan>(policy));
}

Play sample_play(const DuelSpec& spec, const Policy& side1,
                 const Policy& side2, std::uint64_t seed) {
  require_policy_dims(spec, side1, 1);
  require_policy_dims(spec, side2, 2);
  std::mt19937_64 rng(splitmix64(seed));

  Play play;
  play.tau.resize(spec.m);
  play.eta.resize(spec.n);
  int mu = spec.m, nu = spec.n;
  double now = 0.0;
  while (mu > 0 || nu > 0) {
    const double t1 = mu > 0 ? draw(law_of(side1, 1, mu, nu, now), rng) : kInf;
    const double t2 = nu > 0 ? draw(law_of(side2, 2, mu, nu, now), rng) : kInf;
    if (t1 < t2) {
      play.tau[mu - 1] = t1;
      --mu;
      now = t1;
    } else if (t2 < t1) {
      play.eta[nu - 1] = t2;
      --nu;
      now = t2;
    } else {
      play.tau[mu - 1] = t1;
      play.eta[nu - 1] = t2;
      --mu;
      --nu;
      now = t1;
    }
  }
  return play;
}

// ---------------------------------------------------------------------------
// Expected payoff

namespace {

using Eigen::Vector2d;

// Exact expectation over the per-state timing laws by nested quadrature.
// Returns (K1, K2).
class QuadratureEvaluator {
 public:
  QuadratureEvaluator(const DuelSpec& spec, const Policy& side1,
                      const Policy& side2, int nodes)
      : spec_(spec),
        side1_(side1),
        side2_(side2),
        nodes_(nodes),
        win1_(spec.A[0], -spec.B[1]),
        win2_(-spec.B[0], spec.A[1]) {}

  Vector2d run() const { return expect(spec_.m, spec_.n, 0.0); }

 private:
  Vector2d act1(double s, int mu, int nu) const {
    const double p = spec_.p1(s);
    return win1_ * p + (1.0 - p) * expect(mu - 1, nu, s);
  }
  Vector2d act2(double s, int mu, int nu) const {
    const double p = spec_.p2(s);
    return win2_ * p + (1.0 - p) * expect(mu, nu - 1, s);
  }
  Vector2d simultaneous(double s, int mu, int nu) const {
    const double p1 = spec_.p1(s), p2 = spec_.p2(s);
    return win1_ * (p1 * (1.0 - p2)) + win2_ * (p2 * (1.0 - p1)) +
           (1.0 - p1) * (1.0 - p2) * expect(mu - 1, nu - 1, s);
  }

  Vector2d expect(int mu, int nu, double now) const {
    if (mu == 0 && nu == 0) return Vector2d::Zero();
    if (nu == 0) return {spec_.A[0], -spec_.B[1]};
    if (mu == 0) return {-spec_.B[0], spec_.A[1]};

    const Law l1 = law_of(side1_, 1, mu, nu, now);
    const Law l2 = law_of(side2_, 2, mu, nu, now);

    if (l1.point && l2.point) {
      if (l1.a < l2.a) return act1(l1.a, mu, nu);
      if (l2.a < l1.a) return act2(l2.a, mu, nu);
      return simultaneous(l1.a, mu, nu);
    }
    if (l1.point) {
      return point_vs_uniform(l1.a, l2, mu, nu, /*point_is_side1=*/true);
    }
    if (l2.point) {
      return point_vs_uniform(l2.a, l1, mu, nu, /*point_is_side1=*/false);
    }

    // Both uniform: split each side's integral at the other's endpoints so
    // every segment has a smooth integrand.
    Vector2d acc = Vector2d::Zero();
    acc += survival_weighted(l1, l2, mu, nu, /*acting_side1=*/true);
    acc += survival_weighted(l2, l1, mu, nu, /*acting_side1=*/false);
    return acc;
  }

  // E[acting side fires first], acting side's time uniform on `own`,
  // other side's time uniform on `other`.
  Vector2d survival_weighted(const Law& own, const Law& other, int mu, int nu,
                             bool acting_side1) const {
    const double f = 1.0 / (own.b - own.a);
    auto piece = [&](double s) -> Vector2d {
      double surv;  // P(other side's draw exceeds s)
      if (s <= other.a) {
        surv = 1.0;
      } else if (s >= other.b) {
        surv = 0.0;
      } else {
        surv = (other.b - s) / (other.b - other.a);
      }
      if (surv == 0.0) return Vector2d::Zero();
      const Vector2d val =
          acting_side1 ? act1(s, mu, nu) : act2(s, mu, nu);
      return (f * surv) * val;
    };
    Vector2d acc = Vector2d::Zero();
    double cuts[4] = {own.a, std::clamp(other.a, own.a, own.b),
                      std::clamp(other.b, own.a, own.b), own.b};
    for (int c = 0; c < 3; ++c) {
      if (cuts[c + 1] > cuts[c] && cuts[c] < other.b) {
        acc += integrate(piece, cuts[c], std::min(cuts[c + 1], other.b),
                         nodes_);
      }
    }
    return acc;
  }

  Vector2d point_vs_uniform(double s, const Law& u, int mu, int nu,
                            bool point_is_side1) const {
    const double f = 1.0 / (u.b - u.a);
    Vector2d acc = Vector2d::Zero();
    // Mass of the uniform side acting strictly before the point.
    if (s > u.a) {
      const double upper = std::min(s, u.b);
      auto piece = [&](double t) -> Vector2d {
        return f * (point_is_side1 ? act2(t, mu, nu) : act1(t, mu, nu));
      };
      acc += integrate(piece, u.a, upper, nodes_);
    }
    // Mass of the uniform side acting after the point.
    if (s < u.b) {
      const double surv = s <= u.a ? 1.0 : (u.b - s) * f;
      acc += surv * (point_is_side1 ? act1(s, mu, nu) : act2(s, mu, nu));
    }
    return acc;
  }

  const DuelSpec& spec_;
  const Policy& side1_;
  const Policy& side2_;
  int nodes_;
  Vector2d win1_;  // payoff vector when Player I succeeds
  Vector2d win2_;
};

}  // namespace

PayoffEstimate expected_payoff(const DuelSpec& spec, const Policy& side1,
                               const Policy& side2,
                               const ExpectationMethod& method) {
  require_policy_dims(spec, side1, 1);
  require_policy_dims(spec, side2, 2);

  if (const auto* quad = std::get_if<QuadratureMethod>(&method)) {
    if (spec.m + spec.n > 4) {
      throw std::invalid_argument("quadrature supports m + n <= 4");
    }
    if (quad->nodes < 2) {
      throw std::invalid_argument("quadrature needs >= 2 nodes");
    }
    const Vector2d k =
        QuadratureEvaluator(spec, side1, side2, quad->nodes).run();
    PayoffEstimate est;
    est.k1 = k[0];
    est.k2 = k[1];
    est.nodes = quad->nodes;
    return est;
  }

  const auto& mc = std::get<MonteCarloMethod>(method);
  if (mc.samples < 1) throw std::invalid_argument("samples must be >= 1");
  double s1 = 0.0, s2 = 0.0, q1 = 0.0, q2 = 0.0;
  for (long i = 0; i < mc.samples; ++i) {
    const Play play =
        sample_play(spec, side1, side2, splitmix64(mc.seed + (std::uint64_t)i));
    const PayoffVector k = evaluate(spec, play);
    s1 += k.k1;
    s2 += k.k2;
    q1 += k.k1 * k.k1;
    q2 += k.k2 * k.k2;
  }
  const double inv = 1.0 / static_cast<double>(mc.samples);
  PayoffEstimate est;
  est.k1 = s1 * inv;
  est.k2 = s2 * inv;
  est.samples = mc.samples;
  if (mc.samples > 1) {
    const double var1 =
        std::max(0.0, (q1 - s1 * s1 * inv) / (mc.samples - 1));
    const double var2 =
        std::max(0.0, (q2 - s2 * s2 * inv) / (mc.samples - 1));
    est.se1 = std::sqrt(var1 * inv);
    est.se2 = std::sqrt(var2 * inv);
  }
  return est;
}

// ---------------------------------------------------------------------------
// Best response by backward induction over (state, current time)

namespace {

// Piecewise-linear value-of-state table over sorted times.
struct TimeTable {
  std::vector<double> t;
  std::vector<double> w;

  static TimeTable constant(double v) { return {{0.0, 1.0}, {v, v}}; }

  double at(double x) const {
    if (x <= t.front()) return w.front();
    if (x >= t.back()) return w.back();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const size_t i = static_cast<size_t>(it - t.begin()) - 1;
    const double dt = t[i + 1] - t[i];
    if (!(dt > 0.0)) return w[i];
    const double a = (x - t[i]) / dt;
    return w[i] + a * (w[i + 1] - w[i]);
  }
};

struct DpResult {
  double value = 0.0;
  PurePlan plan;
};

// Optimizes Player I's planned times against Player II's behavioral
// strategy, for the chosen payoff component, maximizing or minimizing.
// The grid covers [0,1]; each state's support gets a dense refinement.
class BestResponseDp {
 public:
  BestResponseDp(const DuelSpec& spec, const BehavioralStrategy& opp,
                 int objective, bool maximize, int grid_points,
                 int support_points)
      : spec_(spec),
        opp_(opp),
        maximize_(maximize),
        support_points_(support_points),
        win1_(objective == 1 ? spec.A[0] : -spec.B[1]),
        win2_(objective == 1 ? -spec.B[0] : spec.A[1]),
        base10_(objective == 1 ? spec.A[0] : -spec.B[1]),
        base01_(objective == 1 ? -spec.B[0] : spec.A[1]) {
    global_.resize(grid_points);
    for (int i = 0; i < grid_points; ++i) {
      global_[i] = static_cast<double>(i) / (grid_points - 1);
    }
  }

  DpResult run() {
    const int m = spec_.m, n = spec_.n;
    tables_.assign(m + 1, std::vector<TimeTable>(n + 1));
    DpResult out;
    out.plan = PurePlan::constant(1, m, n, 1.0);
    for (int nu = 0; nu <= n; ++nu) tables_[0][nu] = TimeTable::constant(nu == 0 ? 0.0 : base01_);
    for (int mu = 1; mu <= m; ++mu) tables_[mu][0] = TimeTable::constant(base10_);
    for (int s = 2; s <= m + n; ++s) {
      for (int mu = std::max(1, s - n); mu <= std::min(m, s - 1); ++mu) {
        const int nu = s - mu;
        double plan_time = 1.0;
        tables_[mu][nu] = solve_state(mu, nu, plan_time);
        out.plan.at(mu, nu) = plan_time;
      }
    }
    out.value = (m == 0 || n == 0) ? tables_[m][n].at(0.0)
                                   : tables_[m][n].w.front();
    return out;
  }

 private:
  double better(double a, double b) const {
    return maximize_ ? std::max(a, b) : std::min(a, b);
  }
  bool improves(double cand, double best) const {
    return maximize_ ? cand > best : cand < best;
  }

  double act1(double s, const TimeTable& cont) const {
    const double p = spec_.p1(s);
    return win1_ * p + (1.0 - p) * cont.at(s);
  }
  double act2(double s, const TimeTable& cont) const {
    const double p = spec_.p2(s);
    return win2_ * p + (1.0 - p) * cont.at(s);
  }
  double simultaneous(double s, const TimeTable& cont) const {
    const double p1 = spec_.p1(s), p2 = spec_.p2(s);
    return win1_ * p1 * (1.0 - p2) + win2_ * p2 * (1.0 - p1) +
           (1.0 - p1) * (1.0 - p2) * cont.at(s);
  }

  TimeTable solve_state(int mu, int nu, double& plan_time) {
    const TimeTable& up = tables_[mu - 1][nu];      // after Player I fires
    const TimeTable& left = tables_[mu][nu - 1];    // after opponent fires
    const TimeTable& diag = tables_[mu - 1][nu - 1];
    const double lo = opp_.lo(mu, nu), hi = opp_.hi(mu, nu);
    const double gdx = global_[1] - global_[0];

    // Union time grid: global plus a dense refinement where the opponent's
    // conditional law changes quickly.
    std::vector<double> times = global_;
    if (hi > lo) {
      for (int r = 0; r < support_points_; ++r) {
        times.push_back(lo + (hi - lo) * r / (support_points_ - 1));
      }
    } else {
      const double a = std::max(0.0, lo - gdx);
      for (int r = 0; r < 65; ++r) times.push_back(a + (lo - a) * r / 64.0);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    const int U = static_cast<int>(times.size());

    std::vector<double> hact(U);
    for (int i = 0; i < U; ++i) hact[i] = act1(times[i], up);

    std::vector<double> value(U);
    const double init = maximize_ ? -kInf : kInf;

    if (hi <= lo) {
      // Point-mass opponent at c: fire strictly earlier, join at c, or wait.
      const double c = lo;
      const double at_c = better(simultaneous(c, diag), act2(c, left));
      double run = init, run_t = c;
      int idx_before = static_cast<int>(
          std::lower_bound(times.begin(), times.end(), c) - times.begin() - 1);
      std::vector<double> suffix(U, init), suffix_t(U, c);
      for (int i = idx_before; i >= 0; --i) {
        suffix[i] = run = better(run, hact[i]);
        suffix_t[i] = run_t = (run == hact[i] ? times[i] : run_t);
      }
      for (int i = 0; i < U; ++i) {
        const double now = times[i];
        if (now < c) {
          double v = at_c;
          if (i <= idx_before && improves(suffix[i], v)) v = suffix[i];
          value[i] = v;
        } else {
          value[i] = better(simultaneous(now, diag), act2(now, left));
        }
      }
      plan_time = (idx_before >= 0 && improves(suffix[0], at_c))
                      ? suffix_t[0]
                      : (improves(simultaneous(c, diag), act2(c, left))
                             ? c
                             : 1.0);
      return {std::move(times), std::move(value)};
    }

    // Uniform opponent on [lo, hi].
    const double width = hi - lo;
    const int R = support_points_;
    std::vector<double> supp(R), hact_s(R), H(R, 0.0);
    for (int r = 0; r < R; ++r) {
      supp[r] = lo + width * r / (R - 1);
      hact_s[r] = act1(supp[r], up);
    }
    auto hopp = [&](double u) { return act2(u, left); };
    for (int r = 1; r < R; ++r) {
      H[r] = H[r - 1] + integrate(hopp, supp[r - 1], supp[r], 3);
    }
    // Value of planning t inside the support when entering before lo.
    double s_best = init, s_best_t = hi;
    std::vector<double> vfull(R);
    for (int r = 0; r < R; ++r) {
      vfull[r] = H[r] / width + ((hi - supp[r]) / width) * hact_s[r];
      if (improves(vfull[r], s_best)) {
        s_best = vfull[r];
        s_best_t = supp[r];
      }
    }

    const int idx_lo = static_cast<int>(
        std::upper_bound(times.begin(), times.end(), lo) - times.begin() - 1);
    std::vector<double> prelo(idx_lo + 1, init), prelo_t(idx_lo + 1, lo);
    {
      double run = init, run_t = lo;
      for (int i = idx_lo; i >= 0; --i) {
        run = better(run, hact[i]);
        run_t = (run == hact[i] ? times[i] : run_t);
        prelo[i] = run;
        prelo_t[i] = run_t;
      }
    }

    auto H_at = [&](double x) {
      const double pos = (x - lo) / width * (R - 1);
      const int r = std::clamp(static_cast<int>(pos), 0, R - 2);
      const double frac = pos - r;
      return H[r] + frac * (H[r + 1] - H[r]);
    };

    for (int i = 0; i < U; ++i) {
      const double now = times[i];
      if (now <= lo) {
        value[i] = better(prelo[i], s_best);
      } else if (now < hi) {
        const double w = hi - now;
        const double h_now = H_at(now);
        double v = act1(now, up);  // fire immediately
        const int r0 = static_cast<int>(
            std::lower_bound(supp.begin(), supp.end(), now) - supp.begin());
        for (int r = r0; r < R; ++r) {
          const double cand =
              (H[r] - h_now) / w + ((hi - supp[r]) / w) * hact_s[r];
          v = better(v, cand);
        }
        value[i] = v;
      } else {
        value[i] = better(simultaneous(now, diag), act2(now, left));
      }
    }
    plan_time = improves(prelo[0], s_best) ? prelo_t[0] : s_best_t;
    return {std::move(times), std::move(value)};
  }

  const DuelSpec& spec_;
  const BehavioralStrategy& opp_;
  bool maximize_;
  int support_points_;
  double win1_, win2_;
  double base10_, base01_;  // decided-game values at (mu>0,0) and (0,nu>0)
  std::vector<double> global_;
  std::vector<std::vector<TimeTable>> tables_;
};

DpResult optimize_plan(const DuelSpec& spec, const BehavioralStrategy& opp,
                       int objective, bool maximize, int grid_points,
                       int support_points) {
  return BestResponseDp(spec, opp, objective, maximize, grid_points,
                        support_points)
      .run();
}

}  // namespace

BestResponse best_response(const DuelSpec& spec,
                           const BehavioralStrategy& opponent, int for_player,
                           int time_grid) {
  if (time_grid < 2) throw std::invalid_argument("time grid needs >= 2 points");
  if (for_player != 1 && for_player != 2) {
    throw std::invalid_argument("for_player must be 1 or 2");
  }
  if (opponent.player != 3 - for_player) {
    throw std::invalid_argument("opponent strategy belongs to the wrong side");
  }

  const DuelSpec frame = for_player == 1 ? spec : flipped(spec);
  const BehavioralStrategy opp =
      for_player == 1 ? opponent : flipped(opponent);

  const DpResult main = optimize_plan(frame, opp, 1, true, time_grid, 257);
  const DpResult half =
      optimize_plan(frame, opp, 1, true, std::max(time_grid / 2, 16), 129);

  BestResponse out;
  out.value = main.value;
  out.plan = for_player == 1 ? main.plan : flipped(main.plan);
  out.dp_bound = 2.0 * std::abs(main.value - half.value) + 1e-6;
  out.grid_points = time_grid;
  return out;
}

// ---------------------------------------------------------------------------
// Theorem checks

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

void require_budget(const DuelSpec& spec, const VerifyBudgets& budgets) {
  require_valid(spec);
  if (spec.m < 1 || spec.n < 1 || spec.m > budgets.max_m ||
      spec.n > budgets.max_n) {
    throw std::invalid_argument("resource counts exceed the verify budget");
  }
}

VerificationCheck make_check(std::string name, double lhs, double rhs) {
  VerificationCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs <= rhs;
  return c;
}

}  // namespace

VerificationReport verify_epsilon_equilibrium(const DuelSpec& spec,
                                              double epsilon,
                                              const BehavioralStrategy& x,
                                              const BehavioralStrategy& y,
                                              const VerifyBudgets& budgets) {
  require_budget(spec, budgets);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

  const TGrid grid =
      solve_grid(spec.p1, spec.p2, spec.m, spec.n, budgets.solve_tol);
  const ValueTable values = value_closed(spec, grid);

  VerificationReport report;
  report.m = spec.m;
  report.n = spec.n;
  report.epsilon = epsilon;
  report.v1 = values.v1(spec.m, spec.n);
  report.v2 = values.v2(spec.m, spec.n);
  report.samples = budgets.samples;
  report.grid_points = budgets.grid_points;
  report.seed = budgets.seed;

  const PayoffEstimate est = expected_payoff(
      spec, Policy(x), Policy(y), MonteCarloMethod{budgets.samples, budgets.seed});
  report.k1_mean = est.k1;
  report.k1_stderr = est.se1;
  report.k2_mean = est.k2;
  report.k2_stderr = est.se2;

  const BestResponse br1 = best_response(spec, y, 1, budgets.grid_points);
  const BestResponse br2 = best_response(spec, x, 2, budgets.grid_points);
  report.best_response_1 = br1.value;
  report.best_response_2 = br2.value;
  report.dp_bound_1 = br1.dp_bound;
  report.dp_bound_2 = br2.dp_bound;

  report.checks.push_back(make_check("deviation_gain_1", br1.value - est.k1,
                                     epsilon + 3.0 * est.se1 + br1.dp_bound));
  report.checks.push_back(make_check("deviation_gain_2", br2.value - est.k2,
                                     epsilon + 3.0 * est.se2 + br2.dp_bound));
  report.checks.push_back(make_check("mean_near_value_1",
                                     std::abs(est.k1 - report.v1),
                                     epsilon + 3.0 * est.se1));
  report.checks.push_back(make_check("mean_near_value_2",
                                     std::abs(est.k2 - report.v2),
                                     epsilon + 3.0 * est.se2));
  return report;
}

VerificationReport verify_epsilon_equilibrium(const DuelSpec& spec,
                                              double epsilon,
                                              const VerifyBudgets& budgets) {
  require_budget(spec, budgets);
  const TGrid grid =
      solve_grid(spec.p1, spec.p2, spec.m, spec.n, budgets.solve_tol);
  const EpsilonStrategyResult eq = epsilon_strategy(spec, grid, epsilon);
  return verify_epsilon_equilibrium(spec, epsilon, eq.x, eq.y, budgets);
}

VerificationReport verify_maxmin(const DuelSpec& spec, double epsilon,
                                 const VerifyBudgets& budgets) {
  require_budget(spec, budgets);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

  const TGrid grid =
      solve_grid(spec.p1, spec.p2, spec.m, spec.n, budgets.solve_tol);
  const ValueTable values = value_closed(spec, grid);
  const EpsilonStrategyResult eq = epsilon_strategy(spec, grid, epsilon);

  VerificationReport report;
  report.m = spec.m;
  report.n = spec.n;
  report.epsilon = epsilon;
  report.v1 = values.v1(spec.m, spec.n);
  report.v2 = values.v2(spec.m, spec.n);
  report.samples = 0;
  report.grid_points = budgets.grid_points;
  report.seed = budgets.seed;

  // Opponent plans minimize the strategy owner's payoff; normalize both
  // searches to the frame where Player I optimizes.
  const DuelSpec flip_spec = flipped(spec);
  const BehavioralStrategy flip_x = flipped(eq.x);
  const int G = budgets.grid_points;
  const DpResult f1 = optimize_plan(flip_spec, flip_x, 2, false, G, 257);
  const DpResult f1h =
      optimize_plan(flip_spec, flip_x, 2, false, std::max(G / 2, 16), 129);
  const DpResult f2 = optimize_plan(spec, eq.y, 2, false, G, 257);
  const DpResult f2h =
      optimize_plan(spec, eq.y, 2, false, std::max(G / 2, 16), 129);

  report.maxmin_floor_1 = f1.value;
  report.maxmin_floor_2 = f2.value;
  report.dp_bound_1 = 2.0 * std::abs(f1.value - f1h.value) + 1e-6;
  report.dp_bound_2 = 2.0 * std::abs(f2.value - f2h.value) + 1e-6;

  report.checks.push_back(make_check("guarantee_floor_1",
                                     report.v1 - f1.value,
                                     epsilon + report.dp_bound_1));
  report.checks.push_back(make_check("guarantee_floor_2",
                                     report.v2 - f2.value,
                                     epsilon + report.dp_bound_2));
  return report;
}

}  // namespace duel
