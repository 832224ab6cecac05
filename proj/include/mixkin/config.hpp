#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixkin/errors.hpp"
#include "mixkin/geometry.hpp"

namespace mixkin {

enum class AngularForm { paper_default, custom_table };

/// Collision kernel B_ij(r, c) = C_phi[i][j] * r^gamma * b(c).
///
/// The default angular part b(c) = c^2 (1 - c^2) satisfies the strong cutoff
/// bounds b <= |sin||cos| and |b'| <= 2.
struct CollisionKernelSpec {
  double gamma = 0.0;                     // kinetic exponent, hard/Maxwellian range [0,1]
  std::vector<double> c_phi;              // N*N symmetric, row-major
  AngularForm angular_form = AngularForm::paper_default;
  std::vector<double> table_cos;          // custom table abscissae in [-1,1], increasing
  std::vector<double> table_val;          // custom table values, b >= 0
  double cutoff_constant = 2.0;           // recorded C with b <= C|sin||cos|, |b'| <= C

  double phi_coeff(int i, int j, int species_count) const {
    return c_phi[static_cast<std::size_t>(i) * species_count + j];
  }

  double angular(double cos_theta) const {
    if (angular_form == AngularForm::paper_default) {
      const double c2 = cos_theta * cos_theta;
      return c2 * (1.0 - c2);
    }
    // piecewise-linear table lookup
    if (cos_theta <= table_cos.front()) return table_val.front();
    if (cos_theta >= table_cos.back()) return table_val.back();
    std::size_t hi = 1;
    while (table_cos[hi] < cos_theta) ++hi;
    const double t = (cos_theta - table_cos[hi - 1]) / (table_cos[hi] - table_cos[hi - 1]);
    return (1.0 - t) * table_val[hi - 1] + t * table_val[hi];
  }
};

/// Full physical scenario: species masses, particle numbers, frozen drift
/// velocities, the drift scale epsilon, and the collision kernel.
struct MixtureConfig {
  int species_count = 1;
  std::vector<double> masses;       // m_i > 0
  std::vector<double> c_inf;        // particle numbers c_{i,inf} > 0
  std::vector<Vec3> drifts;         // u_i, frozen per scenario
  double epsilon = 0.0;
  CollisionKernelSpec kernel;

  void validate() const;
  void check_species(int i) const;

  double mass_min() const;
  double rho_inf() const;           // sum m_i c_{i,inf}
  double c_total() const;           // sum c_{i,inf}
};

/// Grid/sphere/report parameters for a CLI run.
struct RunConfig {
  MixtureConfig mixture;
  double grid_radius = 6.0;
  int grid_points = 13;             // odd, >= 5
  int sphere_polar = 8;
  int sphere_azimuth = 8;
  double delta = 0.75;
  std::vector<double> epsilon_sweep = {0.025, 0.05, 0.1};
  std::uint64_t seed = 42;
  std::string output_dir = ".";
  std::string format = "json";      // "json" or "csv"
  int threads = 0;                  // 0 = library default

  void validate() const;
};

}  // namespace mixkin
