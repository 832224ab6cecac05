#include "mixkin/grid.hpp"

#include <cmath>

#include "mixkin/errors.hpp"
#include "mixkin/species.hpp"

namespace mixkin {

VelocityGrid::VelocityGrid(double radius, int points_per_dim) {
  if (!(radius > 0.0)) throw ConfigError("grid radius must be positive");
  if (points_per_dim < 5 || points_per_dim % 2 == 0)
    throw ConfigError("grid points per dimension must be odd and >= 5");
  radius_ = radius;
  n_ = points_per_dim;
  h_ = 2.0 * radius / (n_ - 1);
  w1_.assign(n_, h_);
  w1_.front() = 0.5 * h_;
  w1_.back() = 0.5 * h_;
}

double VelocityGrid::weight_sum() const {
  double s1 = 0.0;
  for (double w : w1_) s1 += w;
  return s1 * s1 * s1;
}

// Golub-Welsch is overkill here; Newton on Legendre polynomials is exact to
// machine precision for the small node counts we use.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

SphereRule::SphereRule(int n_polar, int n_azimuth) {
  if (n_polar < 2) throw ConfigError("sphere polar count must be >= 2");
  if (n_azimuth < 4) throw ConfigError("sphere azimuth count must be >= 4");
  n_polar_ = n_polar;
  n_azimuth_ = n_azimuth;
  std::vector<double> gl_x, gl_w;
  gauss_legendre(n_polar, gl_x, gl_w);
  const double wphi = 2.0 * M_PI / n_azimuth;
  for (int p = 0; p < n_polar; ++p) {
    const double c = gl_x[p];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int q = 0; q < n_azimuth; ++q) {
      const double phi = wphi * (q + 0.5);
      cos_.push_back(c);
      sin_.push_back(s);
      cphi_.push_back(std::cos(phi));
      sphi_.push_back(std::sin(phi));
      weights_.push_back(gl_w[p] * wphi);
    }
  }
}

double SphereRule::angular_mass(const CollisionKernelSpec& kernel) const {
  double s = 0.0;
  for (int k = 0; k < size(); ++k) s += weights_[k] * kernel.angular(cos_[k]);
  return s;
}

double weighted_inner(const MixtureConfig& cfg, const VelocityGrid& grid, WeightedNorm norm,
                      const DistributionVector& f, const DistributionVector& g) {
  if (!f.same_shape(g) || f.species_count != cfg.species_count ||
      f.nodes_per_species != grid.node_count()) {
    throw ConfigError("weighted_inner: mismatched shapes");
  }
  const int nodes = grid.node_count();
  double total = 0.0;
  for (int i = 0; i < cfg.species_count; ++i) {
    const double* fi = f.species(i);
    const double* gi = g.species(i);
    double acc = 0.0;
    for (int a = 0; a < nodes; ++a) {
      const Vec3 v = grid.node(a);
      double w = grid.weight(a) / global_maxwellian(cfg, i, v);
      if (norm.kind == WeightKind::bracket_gamma_mu_inv_half) {
        w *= std::pow(1.0 + norm2(v), 0.5 * norm.gamma);
      }
      acc += w * fi[a] * gi[a];
    }
    total += acc;
  }
  return total;
}

double weighted_norm(const MixtureConfig& cfg, const VelocityGrid& grid, WeightedNorm norm,
                     const DistributionVector& f) {
  return std::sqrt(std::max(0.0, weighted_inner(cfg, grid, norm, f, f)));
}

VelocityGrid build_grid(double radius, int points_per_dim) {
  return VelocityGrid(radius, points_per_dim);
}

SphereRule build_sphere_rule(int n_polar, int n_azimuth) {
  return SphereRule(n_polar, n_azimuth);
}

}  // namespace mixkin
