#include "mixkin/config.hpp"

#include <algorithm>
#include <cmath>

namespace mixkin {

void MixtureConfig::validate() const {
  const int n = species_count;
  if (n < 1) throw ConfigError("species_count must be >= 1");
  if (static_cast<int>(masses.size()) != n || static_cast<int>(c_inf.size()) != n ||
      static_cast<int>(drifts.size()) != n) {
    throw ConfigError("masses, c_inf and drifts must all have species_count entries");
  }
  for (int i = 0; i < n; ++i) {
    if (!(masses[i] > 0.0)) throw ConfigError("masses must be positive");
    if (!(c_inf[i] > 0.0)) throw ConfigError("particle numbers must be positive");
    if (!std::isfinite(drifts[i].x) || !std::isfinite(drifts[i].y) || !std::isfinite(drifts[i].z))
      throw ConfigError("drifts must be finite");
  }
  if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be nonnegative");
  if (!(kernel.gamma >= 0.0 && kernel.gamma <= 1.0))
    throw ConfigError("kernel.gamma must lie in [0, 1]");
  if (static_cast<int>(kernel.c_phi.size()) != n * n)
    throw ConfigError("kernel.c_phi must be an N x N matrix");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double cij = kernel.c_phi[static_cast<std::size_t>(i) * n + j];
      if (!(cij > 0.0)) throw ConfigError("kernel.c_phi entries must be positive");
      const double cji = kernel.c_phi[static_cast<std::size_t>(j) * n + i];
      if (std::abs(cij - cji) > 1e-14 * std::max(1.0, std::abs(cij)))
        throw ConfigError("kernel.c_phi must be symmetric");
    }
  }
  if (kernel.angular_form == AngularForm::custom_table) {
    if (kernel.table_cos.size() < 2 || kernel.table_cos.size() != kernel.table_val.size())
      throw ConfigError("custom angular table needs matching cos/value arrays");
    if (!std::is_sorted(kernel.table_cos.begin(), kernel.table_cos.end()))
      throw ConfigError("custom angular table abscissae must be increasing");
    for (double b : kernel.table_val)
      if (!(b >= 0.0)) throw ConfigError("custom angular table values must be nonnegative");
  }
}

void MixtureConfig::check_species(int i) const {
  if (i < 0 || i >= species_count) throw ConfigError("species index out of range");
}

double MixtureConfig::mass_min() const {
  double m = masses[0];
  for (double v : masses) m = std::min(m, v);
  return m;
}

double MixtureConfig::rho_inf() const {
  double r = 0.0;
  for (int i = 0; i < species_count; ++i) r += masses[i] * c_inf[i];
  return r;
}

double MixtureConfig::c_total() const {
  double c = 0.0;
  for (double v : c_inf) c += v;
  return c;
}

void RunConfig::validate() const {
  mixture.validate();
  if (!(grid_radius > 0.0)) throw ConfigError("grid radius must be positive");
  if (grid_points < 5 || grid_points % 2 == 0)
    throw ConfigError("grid points per dimension must be odd and >= 5");
  if (sphere_polar < 2) throw ConfigError("sphere polar count must be >= 2");
  if (sphere_azimuth < 4) throw ConfigError("sphere azimuth count must be >= 4");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  double last = 0.0;
  for (double e : epsilon_sweep) {
    if (!(e > last)) throw ConfigError("epsilon_sweep must be positive and strictly increasing");
    last = e;
  }
  if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
  if (threads < 0) throw ConfigError("threads must be >= 0");
}

}  // namespace mixkin
