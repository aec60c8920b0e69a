#include "hiddensat/ode.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hiddensat/errors.hpp"
#include "hiddensat/generator.hpp"

namespace hiddensat::ode {

BranchMatrix branching_matrix(const ClauseDensityState& st) {
  if (st.x >= 1.0)
    throw std::domain_error("branching_matrix: x must be < 1");
  const double inv = 1.0 / (1.0 - st.x);
  return {st.s2[1] * inv, 2.0 * st.s2[0] * inv,
          2.0 * st.s2[2] * inv, st.s2[1] * inv};
}

double lambda1(const ClauseDensityState& st) {
  if (st.x >= 1.0) throw std::domain_error("lambda1: x must be < 1");
  const double cross = st.s2[0] * st.s2[2];
  return (st.s2[1] + 2.0 * std::sqrt(cross < 0.0 ? 0.0 : cross)) /
         (1.0 - st.x);
}

RoundMeans round_means(const ClauseDensityState& st) {
  const double lam = lambda1(st);
  if (lam >= 1.0) throw SupercriticalError(lam);
  const BranchMatrix M = branching_matrix(st);
  const double det = (1.0 - M.m11) * (1.0 - M.m22) - M.m12 * M.m21;
  // det > 0 whenever lambda1 < 1 (both eigenvalues of I - M positive).
  const double m_false = 0.5 * ((1.0 - M.m22) + M.m12) / det;
  const double m_true = 0.5 * (M.m21 + (1.0 - M.m11)) / det;
  return {m_false, m_true};
}

Derivatives derivative_field(const ClauseDensityState& st) {
  const RoundMeans rm = round_means(st);
  const double rho_f = rm.m_false / (rm.m_false + rm.m_true);
  const double rho_t = 1.0 - rho_f;
  const double inv = 1.0 / (1.0 - st.x);

  Derivatives d;
  for (int j = 0; j <= 3; ++j) d.ds3[j] = -3.0 * st.s3[j] * inv;
  for (int j = 0; j <= 2; ++j) {
    d.ds2[j] = (-2.0 * st.s2[j] + rho_f * (j + 1) * st.s3[j + 1] +
                rho_t * (3 - j) * st.s3[j]) *
               inv;
  }
  return d;
}

namespace {

struct Packed {
  std::array<double, 7> v{};  // s3[0..3], s2[0..2]
};

Packed pack(const ClauseDensityState& st) {
  Packed p;
  for (int j = 0; j < 4; ++j) p.v[j] = st.s3[j];
  for (int j = 0; j < 3; ++j) p.v[4 + j] = st.s2[j];
  return p;
}

ClauseDensityState unpack(double x, const Packed& p) {
  ClauseDensityState st;
  st.x = x;
  for (int j = 0; j < 4; ++j) st.s3[j] = p.v[j];
  for (int j = 0; j < 3; ++j) st.s2[j] = p.v[4 + j];
  return st;
}

Packed field(double x, const Packed& p) {
  const Derivatives d = derivative_field(unpack(x, p));
  Packed out;
  for (int j = 0; j < 4; ++j) out.v[j] = d.ds3[j];
  for (int j = 0; j < 3; ++j) out.v[4 + j] = d.ds2[j];
  return out;
}

Packed axpy(const Packed& p, double a, const Packed& d) {
  Packed out;
  for (int i = 0; i < 7; ++i) out.v[i] = p.v[i] + a * d.v[i];
  return out;
}

bool finite(const Packed& p) {
  for (const double v : p.v)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

Trajectory integrate_uc(const std::array<double, 4>& s3_init,
                        const IntegrateOptions& opts) {
  if (opts.h <= 0.0) throw std::invalid_argument("integrate_uc: h must be > 0");
  if (opts.sample_stride == 0)
    throw std::invalid_argument("integrate_uc: sample_stride must be >= 1");

  Trajectory traj;
  double x = 0.0;
  Packed s = pack(ClauseDensityState{0.0, s3_init, {}});
  const double x_stop = 1.0 - opts.edge_delta;

  auto note_lambda = [&](double xx, double lam) {
    if (lam > traj.max_lambda1) {
      traj.max_lambda1 = lam;
      traj.x_at_max_lambda1 = xx;
    }
  };
  auto record = [&](double xx, const Packed& p) {
    ClauseDensityState st = unpack(xx, p);
    const double lam = lambda1(st);
    note_lambda(xx, lam);
    traj.samples.push_back({xx, st.s3, st.s2, lam});
    return lam;
  };

  double lam = record(x, s);
  std::size_t step_index = 0;
  for (;;) {
    if (lam >= 1.0) {
      traj.status = TrajectoryStatus::supercritical;
      break;
    }
    if (x >= x_stop) {
      bool emptied = true;
      for (const double v : s.v) emptied = emptied && v < opts.mass_delta;
      traj.status = emptied ? TrajectoryStatus::completed
                            : TrajectoryStatus::exhausted;
      break;
    }

    // Near the singular edge the decay rate i/(1-x) leaves RK4's stability
    // region for fixed h; cap the step at a quarter of the remaining gap.
    double hs = std::min(opts.h, (1.0 - x) / 4.0);
    if (x + hs > x_stop) hs = x_stop - x;

    Packed next;
    try {
      const Packed k1 = field(x, s);
      const Packed k2 = field(x + 0.5 * hs, axpy(s, 0.5 * hs, k1));
      const Packed k3 = field(x + 0.5 * hs, axpy(s, 0.5 * hs, k2));
      const Packed k4 = field(x + hs, axpy(s, hs, k3));
      for (int i = 0; i < 7; ++i)
        next.v[i] = s.v[i] + hs / 6.0 * (k1.v[i] + 2.0 * k2.v[i] +
                                         2.0 * k3.v[i] + k4.v[i]);
    } catch (const SupercriticalError&) {
      // A stage state crossed criticality mid-step; the trajectory is
      // supercritical at (or just past) the current x.
      traj.status = TrajectoryStatus::supercritical;
      break;
    }

    if (!finite(next)) {
      std::ostringstream msg;
      msg << "integrate_uc: non-finite state after step at x = " << x
          << " (last valid sample retained in trajectory)";
      throw std::runtime_error(msg.str());
    }
    // Depleted densities may undershoot zero by rounding; clamp.
    for (double& v : next.v)
      if (v < 0.0) v = 0.0;

    s = next;
    x += hs;
    ++step_index;
    if (step_index % opts.sample_stride == 0 || x >= x_stop) {
      lam = record(x, s);
    } else {
      lam = lambda1(unpack(x, s));
      note_lambda(x, lam);
    }
  }

  // Guarantee the terminal state is sampled even off-stride.
  if (traj.samples.back().x < x) record(x, s);
  return traj;
}

double critical_density(HiddenMode mode, double tol,
                        const IntegrateOptions& opts) {
  if (tol <= 0.0)
    throw std::invalid_argument("critical_density: tol must be > 0");

  std::vector<std::pair<double, double>> probes;
  auto subcritical = [&](double r) {
    const std::vector<double> profile = initial_density_profile(r, mode);
    const Trajectory traj = integrate_uc(
        {profile[0], profile[1], profile[2], profile[3]}, opts);
    probes.emplace_back(r, traj.max_lambda1);
    return traj.status == TrajectoryStatus::completed &&
           traj.max_lambda1 <= 1.0 - 1e-6;
  };

  double lo = 1.0;
  double hi = 3.5;
  if (!subcritical(lo))
    throw BracketError("critical_density: r = 1 already supercritical",
                       std::move(probes));
  int expansions = 0;
  while (subcritical(hi)) {
    if (++expansions > 5)
      throw BracketError("critical_density: no supercritical bracket found",
                         std::move(probes));
    hi *= 1.5;
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (subcritical(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hiddensat::ode
