#include "mixkin/interp.hpp"

#include <cmath>

namespace mixkin {

namespace {

inline bool in_box(const VelocityGrid& g, Vec3 p) {
  const double R = g.radius();
  return std::abs(p.x) <= R && std::abs(p.y) <= R && std::abs(p.z) <= R;
}

}  // namespace

bool make_stencil(const VelocityGrid& grid, InterpScheme scheme, Vec3 p, Stencil& out) {
  out.count = 0;
  if (!in_box(grid, p)) return false;
  const int n = grid.n();
  const double h = grid.spacing();
  // index-space coordinates q in [0, n-1]
  const double q[3] = {(p.x + grid.radius()) / h, (p.y + grid.radius()) / h,
                       (p.z + grid.radius()) / h};

  if (scheme == InterpScheme::linear8) {
    int base[3];
    double t[3];
    for (int d = 0; d < 3; ++d) {
      int b = static_cast<int>(std::floor(q[d]));
      if (b < 0) b = 0;
      if (b > n - 2) b = n - 2;
      base[d] = b;
      t[d] = q[d] - b;
    }
    int c = 0;
    for (int dx = 0; dx < 2; ++dx)
      for (int dy = 0; dy < 2; ++dy)
        for (int dz = 0; dz < 2; ++dz) {
          const double w = (dx ? t[0] : 1.0 - t[0]) * (dy ? t[1] : 1.0 - t[1]) *
                           (dz ? t[2] : 1.0 - t[2]);
          out.idx[c] = grid.index(base[0] + dx, base[1] + dy, base[2] + dz);
          out.w[c] = w;
          ++c;
        }
    out.count = 8;
    return true;
  }

  // quad10: value = f0 + sum_d t_d D_d + sum_d t_d^2/2 S_d + sum_{d<e} t_d t_e C_de
  // with central first/second differences and a one-sided cross difference on
  // the side of the evaluation point.
  int n0[3], sgn[3];
  double t[3];
  for (int d = 0; d < 3; ++d) {
    int b = static_cast<int>(std::lround(q[d]));
    if (b < 1) b = 1;
    if (b > n - 2) b = n - 2;
    n0[d] = b;
    t[d] = q[d] - b;
    sgn[d] = t[d] >= 0.0 ? 1 : -1;
  }
  const int stride[3] = {n * n, n, 1};
  const int center = (n0[0] * n + n0[1]) * n + n0[2];

  double w_center = 1.0;
  int c = 0;
  // plus/minus axis nodes
  for (int d = 0; d < 3; ++d) {
    const double wp = 0.5 * t[d] + 0.5 * t[d] * t[d];
    const double wm = -0.5 * t[d] + 0.5 * t[d] * t[d];
    out.idx[c] = center + stride[d];
    out.w[c] = wp;
    ++c;
    out.idx[c] = center - stride[d];
    out.w[c] = wm;
    ++c;
    w_center -= t[d] * t[d];
  }
  // cross nodes, one per axis pair, on the side of the point
  static constexpr int pair_a[3] = {0, 0, 1};
  static constexpr int pair_b[3] = {1, 2, 2};
  for (int k = 0; k < 3; ++k) {
    const int d = pair_a[k], e = pair_b[k];
    const double cw = t[d] * t[e] * sgn[d] * sgn[e];
    out.idx[c] = center + sgn[d] * stride[d] + sgn[e] * stride[e];
    out.w[c] = cw;
    ++c;
    // the cross difference also hits the two axis nodes and the center
    const int ia = sgn[d] > 0 ? 2 * d : 2 * d + 1;       // slot of f_{sgn_d d}
    const int ib = sgn[e] > 0 ? 2 * e : 2 * e + 1;
    out.w[ia] -= cw;
    out.w[ib] -= cw;
    w_center += cw;
  }
  out.idx[c] = center;
  out.w[c] = w_center;
  out.count = c + 1;
  return true;
}

double interpolate(const VelocityGrid& grid, InterpScheme scheme, const double* field, Vec3 p) {
  Stencil st;
  if (!make_stencil(grid, scheme, p, st)) return 0.0;
  double acc = 0.0;
  for (int k = 0; k < st.count; ++k) acc += st.w[k] * field[st.idx[k]];
  return acc;
}

}  // namespace mixkin
