#include "mixkin/species.hpp"

#include <cmath>

namespace mixkin {

double maxwellian_prefactor(const MixtureConfig& cfg, int i) {
  return cfg.c_inf[i] * std::pow(cfg.masses[i] / (2.0 * M_PI), 1.5);
}

double global_maxwellian(const MixtureConfig& cfg, int i, Vec3 v) {
  cfg.check_species(i);
  return maxwellian_prefactor(cfg, i) * std::exp(-0.5 * cfg.masses[i] * norm2(v));
}

double local_maxwellian(const MixtureConfig& cfg, int i, Vec3 v) {
  cfg.check_species(i);
  const Vec3 shifted = v - cfg.epsilon * cfg.drifts[i];
  return maxwellian_prefactor(cfg, i) * std::exp(-0.5 * cfg.masses[i] * norm2(shifted));
}

Lemma1Params lemma1_constant(const MixtureConfig& cfg, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  Lemma1Params out;
  out.delta = delta;
  double cmax = 0.0;
  for (int i = 0; i < cfg.species_count; ++i) {
    const double m = cfg.masses[i];
    // sup_r (r/4) exp(-(1-delta) m r^2 / 4), attained at r* = sqrt(2/((1-delta) m))
    const double rstar = std::sqrt(2.0 / ((1.0 - delta) * m));
    const double sup = 0.25 * rstar * std::exp(-0.5);
    const double ci = m * std::pow(m / (2.0 * M_PI), 1.5 * (1.0 - delta)) * (5.0 - delta) *
                      (sup + (5.0 - delta) / (1.0 - delta));
    cmax = std::max(cmax, ci);
  }
  out.c_delta = cmax;
  out.r_eps.resize(cfg.species_count);
  for (int i = 0; i < cfg.species_count; ++i) {
    const double speed = norm(cfg.drifts[i]);
    out.r_eps[i] =
        1.0 + cfg.epsilon * speed *
                  std::exp(4.0 * cfg.masses[i] / (1.0 - delta) * cfg.epsilon * cfg.epsilon * speed * speed);
  }
  return out;
}

GapCheck maxwellian_gap_check(const MixtureConfig& cfg, int i, Vec3 v, double delta) {
  cfg.check_species(i);
  const Lemma1Params params = lemma1_constant(cfg, delta);
  GapCheck out;
  out.lhs = std::abs(local_maxwellian(cfg, i, v) - global_maxwellian(cfg, i, v));
  const double speed = norm(cfg.drifts[i]);
  out.rhs = params.c_delta * cfg.epsilon * std::pow(cfg.c_inf[i], 1.0 - delta) * speed *
            params.r_eps[i] * std::pow(global_maxwellian(cfg, i, v), delta);
  out.holds = out.lhs <= out.rhs || out.lhs == 0.0;
  return out;
}

}  // namespace mixkin
