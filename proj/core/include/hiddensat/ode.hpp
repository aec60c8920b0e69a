#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hiddensat/formula.hpp"

// Mean-field model of the Unit Clause heuristic on (planted) random 3-SAT.
//
// State: x is the fraction of variables already set; s3[j] and s2[j] are the
// per-n densities of surviving 3- and 2-clauses with j literals agreeing
// with the reference assignment.  A unit clause spawns further unit clauses
// through the 2-clauses it hits, a two-type branching process (types = unit
// literal disagreeing/agreeing with the reference) with mean matrix
//
//   M = 1/(1-x) * [ s21  2*s20 ]
//                 [ 2*s22  s21 ]
//
// Propagation chains stay finite while the spectral radius lambda1(M) < 1;
// the expected round sizes are (m_F, m_T) = (I - M)^-1 (1/2, 1/2).  Between
// rounds the densities drift by the rescaled equations implemented in
// derivative_field; integrating them from the generator's initial profile
// and bisecting on the density r at which lambda1 touches 1 yields the
// heuristic's critical density per hidden mode.

namespace hiddensat::ode {

struct ClauseDensityState {
  double x = 0.0;
  std::array<double, 4> s3{};  // densities of 3-clauses, by agreement count
  std::array<double, 3> s2{};  // densities of 2-clauses, by agreement count
};

struct BranchMatrix {
  double m11 = 0.0, m12 = 0.0;
  double m21 = 0.0, m22 = 0.0;
};

// Throws std::domain_error when st.x >= 1.
BranchMatrix branching_matrix(const ClauseDensityState& st);

// Largest eigenvalue of the branching matrix:
// (s21 + 2*sqrt(s20*s22)) / (1-x).
double lambda1(const ClauseDensityState& st);

struct RoundMeans {
  double m_false = 0.0;  // expected variables set false per round
  double m_true = 0.0;   // expected variables set true per round
};

// (I - M)^-1 (1/2, 1/2); throws SupercriticalError when lambda1 >= 1.
RoundMeans round_means(const ClauseDensityState& st);

struct Derivatives {
  std::array<double, 4> ds3{};
  std::array<double, 3> ds2{};
};

// The rescaled drift: with rho_F = m_F/(m_F + m_T) and rho_T = 1 - rho_F,
//   ds3[j]/dx = -3 s3[j] / (1-x)
//   ds2[j]/dx = (-2 s2[j] + rho_F (j+1) s3[j+1] + rho_T (3-j) s3[j]) / (1-x).
// Throws SupercriticalError (via round_means) when lambda1 >= 1.
Derivatives derivative_field(const ClauseDensityState& st);

enum class TrajectoryStatus { completed, supercritical, exhausted };

struct TrajectorySample {
  double x = 0.0;
  std::array<double, 4> s3{};
  std::array<double, 3> s2{};
  double lambda1 = 0.0;
};

struct Trajectory {
  TrajectoryStatus status = TrajectoryStatus::completed;
  std::vector<TrajectorySample> samples;  // x strictly increasing
  double max_lambda1 = 0.0;
  double x_at_max_lambda1 = 0.0;
};

struct IntegrateOptions {
  double h = 1e-4;           // RK4 step in x
  double edge_delta = 1e-6;  // integrate up to x = 1 - edge_delta
  double mass_delta = 1e-8;  // "all clauses gone" threshold at the edge
  std::size_t sample_stride = 1;  // record every stride-th step
};

// Classical RK4 from x = 0 with initial 3-clause profile s3_init (from
// generator::initial_density_profile) and s2 = 0.  The last ~2h before the
// singular edge x = 1 use steps capped at (1-x)/4, landing exactly on
// 1 - edge_delta (plain fixed steps are unstable against the -i/(1-x)
// decay).  Terminates supercritical as soon as lambda1 >= 1; otherwise
// completed/exhausted at the edge depending on whether all densities fell
// below mass_delta.  Throws std::runtime_error if the state turns non-finite.
Trajectory integrate_uc(const std::array<double, 4>& s3_init,
                        const IntegrateOptions& opts = {});

// Largest r (within tol) at which the integrated trajectory stays
// subcritical: bisection of the predicate "status == completed and
// max lambda1 <= 1 - 10^-6" on r in [1, 3.5] (expanded upward if needed).
// Throws BracketError with the probe log when no bracket exists.
double critical_density(HiddenMode mode, double tol = 1e-5,
                        const IntegrateOptions& opts = {});

}  // namespace hiddensat::ode
