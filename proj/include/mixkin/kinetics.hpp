#pragma once

#include <vector>

#include "mixkin/config.hpp"
#include "mixkin/geometry.hpp"
#include "mixkin/grid.hpp"

namespace mixkin {

/// One elastic collision: pre-collisional pair reconstructed from (v, v*, sigma).
struct CollisionGeometry {
  Vec3 v, v_star;
  Vec3 sigma;
  Vec3 v_prime, v_star_prime;
  double cos_theta = 1.0;
};

/// v'      = (m_i v + m_j v* + m_j |v-v*| sigma) / (m_i + m_j)
/// v*'     = (m_i v + m_j v* - m_i |v-v*| sigma) / (m_i + m_j)
/// Momentum m_i v' + m_j v*' and kinetic energy are conserved exactly.
CollisionGeometry post_collision(const MixtureConfig& cfg, int i, int j, Vec3 v, Vec3 v_star,
                                 Vec3 sigma);

/// B_ij(r, c) = C_phi[i][j] r^gamma b(c). r^0 == 1 at r == 0.
double kernel_value(const CollisionKernelSpec& spec, int i, int j, int species_count,
                    double rel_speed, double cos_theta);

/// nu_ij(v): quadrature of int B_ij(|v - v*|, cos) mu_j(v*) dsigma dv*.
/// The angular integral is direction-independent and factors out.
double collision_frequency(const MixtureConfig& cfg, const VelocityGrid& grid,
                           const SphereRule& sphere, int i, int j, Vec3 v);

/// All nu_ij sampled at the grid nodes; out[(i * N + j) * nodes + a].
std::vector<double> collision_frequency_table(const MixtureConfig& cfg, const VelocityGrid& grid,
                                              const SphereRule& sphere);

/// Q_ij(F_i, F_j) at every grid node (gain by interpolation, loss nodal).
void q_bilinear_field(const MixtureConfig& cfg, const VelocityGrid& grid, const SphereRule& sphere,
                      int i, int j, const double* F_i, const double* F_j, double* out);

/// Q_ij(F_i, F_j)(v) at a single grid node.
double q_bilinear(const MixtureConfig& cfg, const VelocityGrid& grid, const SphereRule& sphere,
                  int i, int j, const double* F_i, const double* F_j, int node);

/// Full mixture operator Q_i(F, F) = sum_j Q_ij(F_i, F_j) for every i.
DistributionVector q_mixture(const MixtureConfig& cfg, const VelocityGrid& grid,
                             const SphereRule& sphere, const DistributionVector& F);

struct MomentReport {
  std::vector<double> c;   // per-species number
  double rho = 0.0;        // sum m_i c_i
  Vec3 u_bulk;             // mixture bulk velocity
  double theta_bulk = 0.0; // mixture temperature
};

MomentReport moments(const MixtureConfig& cfg, const VelocityGrid& grid,
                     const DistributionVector& F);

}  // namespace mixkin
