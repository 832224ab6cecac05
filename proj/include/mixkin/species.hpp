#pragma once

#include <vector>

#include "mixkin/config.hpp"
#include "mixkin/geometry.hpp"

namespace mixkin {

/// Global Maxwellian mu_i(v) = c_{i,inf} (m_i / 2 pi)^{3/2} exp(-m_i |v|^2 / 2).
double global_maxwellian(const MixtureConfig& cfg, int i, Vec3 v);

/// Shifted Maxwellian M^eps_i(v) = mu_i(v - eps * u_i).
double local_maxwellian(const MixtureConfig& cfg, int i, Vec3 v);

/// Normalization prefactor c_{i,inf} (m_i / 2 pi)^{3/2}.
double maxwellian_prefactor(const MixtureConfig& cfg, int i);

struct Lemma1Params {
  double delta = 0.0;
  double c_delta = 0.0;
  std::vector<double> r_eps;  // R_{eps,i} = 1 + eps|u_i| exp(4 m_i eps^2 |u_i|^2 / (1-delta))
};

/// Closed-form constant of the Maxwellian-gap bound:
///   C_delta = max_i m_i (m_i/2pi)^{3(1-delta)/2} (5-delta)
///             [ sup_{r>=0} (r/4) e^{-(1-delta) m_i r^2 / 4} + (5-delta)/(1-delta) ],
/// with the supremum attained at r* = sqrt(2 / ((1-delta) m_i)).
Lemma1Params lemma1_constant(const MixtureConfig& cfg, double delta);

struct GapCheck {
  double lhs = 0.0;   // |M^eps_i(v) - mu_i(v)|
  double rhs = 0.0;   // C_delta eps c^{1-delta} |u_i| R_{eps,i} mu_i(v)^delta
  bool holds = false;
};

/// Pointwise check of the Maxwellian-gap inequality at a velocity.
GapCheck maxwellian_gap_check(const MixtureConfig& cfg, int i, Vec3 v, double delta);

}  // namespace mixkin
