#pragma once

#include <vector>

#include "mixkin/config.hpp"
#include "mixkin/geometry.hpp"

namespace mixkin {

/// Uniform tensor grid on [-R, R]^3 with trapezoidal weights. n is odd so the
/// node set contains the origin and is symmetric under v -> -v.
class VelocityGrid {
 public:
  VelocityGrid() = default;
  VelocityGrid(double radius, int points_per_dim);

  double radius() const { return radius_; }
  int n() const { return n_; }
  int node_count() const { return n_ * n_ * n_; }
  double spacing() const { return h_; }

  double axis(int k) const { return -radius_ + h_ * k; }
  Vec3 node(int a) const {
    const int iz = a % n_, iy = (a / n_) % n_, ix = a / (n_ * n_);
    return {axis(ix), axis(iy), axis(iz)};
  }
  int index(int ix, int iy, int iz) const { return (ix * n_ + iy) * n_ + iz; }

  /// Trapezoid weight of node a (product of 1-D weights).
  double weight(int a) const {
    const int iz = a % n_, iy = (a / n_) % n_, ix = a / (n_ * n_);
    return w1_[ix] * w1_[iy] * w1_[iz];
  }
  double weight1d(int k) const { return w1_[k]; }

  double weight_sum() const;

 private:
  double radius_ = 0.0;
  double h_ = 0.0;
  int n_ = 0;
  std::vector<double> w1_;
};

/// Quadrature rule on the unit sphere relative to a polar axis: Gauss-Legendre
/// in cos(theta) times a uniform midpoint rule in azimuth. Exact for constants
/// (sums to 4*pi) and for any azimuthally symmetric polynomial the 1-D rule
/// resolves.
class SphereRule {
 public:
  SphereRule() = default;
  SphereRule(int n_polar, int n_azimuth);

  int size() const { return static_cast<int>(weights_.size()); }
  int n_polar() const { return n_polar_; }
  int n_azimuth() const { return n_azimuth_; }

  double cos_theta(int s) const { return cos_[s]; }
  double sin_theta(int s) const { return sin_[s]; }
  double cos_phi(int s) const { return cphi_[s]; }
  double sin_phi(int s) const { return sphi_[s]; }
  double weight(int s) const { return weights_[s]; }

  /// Node s as a direction, given the polar axis n and a frame (e1, e2).
  Vec3 direction(int s, Vec3 n, Vec3 e1, Vec3 e2) const {
    return cos_[s] * n + sin_[s] * (cphi_[s] * e1 + sphi_[s] * e2);
  }

  /// Discrete \int_{S^2} b(cos theta) dsigma for the configured kernel.
  double angular_mass(const CollisionKernelSpec& kernel) const;

 private:
  int n_polar_ = 0, n_azimuth_ = 0;
  std::vector<double> cos_, sin_, cphi_, sphi_, weights_;
};

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Per-species sampled values of a perturbation on the grid.
struct DistributionVector {
  int species_count = 0;
  int nodes_per_species = 0;
  std::vector<double> data;  // species-major: data[i * nodes + a]

  DistributionVector() = default;
  DistributionVector(int species, int nodes)
      : species_count(species), nodes_per_species(nodes),
        data(static_cast<std::size_t>(species) * nodes, 0.0) {}

  double& operator()(int i, int a) { return data[static_cast<std::size_t>(i) * nodes_per_species + a]; }
  double operator()(int i, int a) const { return data[static_cast<std::size_t>(i) * nodes_per_species + a]; }
  double* species(int i) { return data.data() + static_cast<std::size_t>(i) * nodes_per_species; }
  const double* species(int i) const { return data.data() + static_cast<std::size_t>(i) * nodes_per_species; }

  bool same_shape(const DistributionVector& o) const {
    return species_count == o.species_count && nodes_per_species == o.nodes_per_species;
  }
};

enum class WeightKind { mu_inv_half, bracket_gamma_mu_inv_half };

/// Weight selection for inner products: plain mu^{-1/2} or <v>^{gamma/2} mu^{-1/2}.
struct WeightedNorm {
  WeightKind kind = WeightKind::mu_inv_half;
  double gamma = 0.0;
};

/// sum_i sum_a w_a f_i(a) g_i(a) mu_i^{-1}(v_a) [ * <v_a>^gamma ].
double weighted_inner(const MixtureConfig& cfg, const VelocityGrid& grid, WeightedNorm norm,
                      const DistributionVector& f, const DistributionVector& g);

double weighted_norm(const MixtureConfig& cfg, const VelocityGrid& grid, WeightedNorm norm,
                     const DistributionVector& f);

VelocityGrid build_grid(double radius, int points_per_dim);
SphereRule build_sphere_rule(int n_polar, int n_azimuth);

}  // namespace mixkin
