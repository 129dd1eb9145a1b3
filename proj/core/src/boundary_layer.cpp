// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/boundary_layer.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "slitwave/errors.hpp"
#include "slitwave/fem.hpp"
#include "slitwave/mesh.hpp"
#include "slitwave/quadrature.hpp"
#include "slitwave/special_functions.hpp"

namespace slitwave {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------
// Primary method: aperture Galerkin system.
//
// Strip side:      Y = xi_y + C + sum_n a_n cos(n pi (xi_x + 1/2)) e^{-n pi xi_y}
// Aperture flux:   v(s) = 1 - sum_n n pi a_n cos(n pi (s + 1/2))
// Half-plane side: single layer (1/pi) int v(s) ln(1/|x - s|) ds, whose
// far field is (1/pi) ln(1/|xi|) with no additive constant.
// Matching the traces on the aperture and projecting on the cosine basis
// gives a dense system for the a_n; the m = 0 row yields C.
// ---------------------------------------------------------------------

// Inner integral A_n(u) = int_0^1 cos(n pi t) ln|u - t| dt (aperture
// coordinates u, t in (0,1)); closed form through Si/Ci for n >= 1.
double log_cosine_integral(int n, double u) {
  if (n == 0) {
    double value = -1.0;
    if (u > 0.0) value += u * std::log(u);
    if (u < 1.0) value += (1.0 - u) * std::log(1.0 - u);
    return value;
  }
  const double a = n * kPi;
  const double left = a * u;
  const double right = a * (1.0 - u);
  const double ci_diff = cosine_integral(right) - cosine_integral(left);
  const double si_sum = sine_integral(right) + sine_integral(left);
  return -(std::sin(a * u) * ci_diff + std::cos(a * u) * si_sum) / a;
}

struct ApertureQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Panels graded geometrically into both endpoints (the aperture flux has
// an integrable corner singularity there) and sized to resolve the highest
// cosine mode in the middle.
ApertureQuadrature aperture_quadrature(int n_modes) {
  const double w_mid = std::min(0.02, 10.0 / (n_modes * kPi));
  std::vector<double> breaks;
  breaks.push_back(0.0);
  for (double d = 1e-12; d < w_mid; d *= 2.0) breaks.push_back(d);
  const double left_end = breaks.back();
  const int n_mid = std::max(
      1, static_cast<int>(std::ceil((1.0 - 2.0 * left_end) / w_mid)));
  for (int i = 1; i <= n_mid; ++i) {
    breaks.push_back(left_end + (1.0 - 2.0 * left_end) * i / n_mid);
  }
  for (size_t i = breaks.size() - n_mid - 1; i-- > 1;) {
    breaks.push_back(1.0 - breaks[i]);
  }
  breaks.push_back(1.0);

  const GaussRule& rule = gauss_legendre(12);
  ApertureQuadrature quad;
  for (size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p];
    const double b = breaks[p + 1];
    if (!(b > a)) continue;
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
      quad.nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[q]);
      quad.weights.push_back(0.5 * (b - a) * rule.weights[q]);
    }
  }
  return quad;
}

// Galerkin value of the junction constant with n_modes strip harmonics.
double c_xi_galerkin(int n_modes) {
  const ApertureQuadrature quad = aperture_quadrature(n_modes);
  const int nq = static_cast<int>(quad.nodes.size());

  // inner[q][n] = A_n(u_q), cosw[m][q] = w_q cos(m pi u_q)
  Eigen::MatrixXd inner(nq, n_modes + 1);
  Eigen::MatrixXd cosw(n_modes + 1, nq);
  for (int q = 0; q < nq; ++q) {
    const double u = quad.nodes[q];
    for (int n = 0; n <= n_modes; ++n) {
      inner(q, n) = log_cosine_integral(n, u);
      cosw(n, q) = quad.weights[q] * std::cos(n * kPi * u);
    }
  }
  // I_mn = int cos(m pi u) A_n(u) du  (ln|u-t| kernel; S = -I/pi)
  const Eigen::MatrixXd I = cosw * inner;

  Eigen::MatrixXd system(n_modes, n_modes);
  Eigen::VectorXd rhs(n_modes);
  for (int m = 1; m <= n_modes; ++m) {
    rhs(m - 1) = -I(m, 0) / kPi;
    for (int n = 1; n <= n_modes; ++n) {
      system(m - 1, n - 1) = (m == n ? 0.5 : 0.0) - n * I(m, n);
    }
  }
  const Eigen::VectorXd a = system.partialPivLu().solve(rhs);

  double c = -I(0, 0) / kPi;
  for (int n = 1; n <= n_modes; ++n) c += n * I(0, n) * a(n - 1);
  return c;
}

}  // namespace

double compute_c_xi(double tolerance) {
  if (!(tolerance > 0.0)) {
    throw DomainError("compute_c_xi: tolerance must be positive");
  }
  static std::map<double, double> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(tolerance);
    if (it != memo.end()) return it->second;
  }

  // Richardson extrapolation over doubling truncation orders; the raw
  // values converge algebraically (corner singularity of the aperture
  // flux), the extrapolants settle quickly.
  std::vector<double> raw;
  std::vector<double> extrapolated;
  double previous = 0.0;
  bool have_previous = false;
  for (int n_modes = 16; n_modes <= 1024; n_modes *= 2) {
    raw.push_back(c_xi_galerkin(n_modes));
    if (raw.size() >= 3) {
      const double c1 = raw[raw.size() - 3];
      const double c2 = raw[raw.size() - 2];
      const double c3 = raw.back();
      const double d1 = c2 - c1;
      const double d2 = c3 - c2;
      double value = c3;
      if (d2 != 0.0 && d1 * d2 > 0.0 && std::abs(d2) < std::abs(d1)) {
        const double rate = d2 / d1;  // ~ 2^{-p}
        value = c3 + d2 * rate / (1.0 - rate);
      }
      extrapolated.push_back(value);
      if (have_previous && std::abs(value - previous) <= tolerance) {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo[tolerance] = value;
        return value;
      }
      previous = value;
      have_previous = true;
    }
  }
  throw ConvergenceError(
      "compute_c_xi: refinement sequence did not settle within tolerance");
}

double compute_c_xi_truncated(double box_w, double strip_h, double h_far,
                              double h_corner) {
  if (!(box_w >= 4.0 && strip_h >= 2.0)) {
    throw DomainError("compute_c_xi_truncated: truncation box too small");
  }

  // Two rectangles: half-plane box [-W, W] x [-W, 0] and the semi-strip
  // [-1/2, 1/2] x [0, H], sharing the aperture subdivision exactly.
  const double W = box_w;
  const double D = box_w;
  const double H = strip_h;

  std::vector<double> aperture_x =
      graded_lines(-0.5, 0.5, h_corner, h_far, h_corner);

  auto splice = [](std::vector<double> left, const std::vector<double>& mid,
                   const std::vector<double>& right) {
    left.insert(left.end(), mid.begin() + 1, mid.end() - 1);
    left.push_back(right.front());
    left.insert(left.end(), right.begin() + 1, right.end());
    return left;
  };
  const std::vector<double> box_x =
      splice(graded_lines(-W, -0.5, h_far, h_far, h_corner), aperture_x,
             graded_lines(0.5, W, h_corner, h_far, h_far));
  const std::vector<double> box_y =
      graded_lines(-D, 0.0, h_far, h_far, h_corner);
  const std::vector<double> strip_y =
      graded_lines(0.0, H, h_corner, h_far, h_far);

  std::vector<RectGridSpec> specs(2);
  specs[0] = {{-W, W, -D, 0.0, "halfplane"}, box_x, box_y};
  specs[1] = {{-0.5, 0.5, 0.0, H, "strip"}, aperture_x, strip_y};
  const StructuredMesh mesh = assemble_structured_mesh(specs);

  // Exact flux of the far field -(1/pi) ln|xi| on the truncation faces and
  // the unit flux of the linear growth at the strip top.
  auto far_flux = [](double x, double y, double nx, double ny) {
    const double r2 = x * x + y * y;
    return -(nx * x + ny * y) / (kPi * r2);
  };
  std::vector<NeumannLoad> loads = {
      {1, Side::top, [](double, double) { return 1.0; }},
      {0, Side::left, [&](double x, double y) { return far_flux(x, y, -1, 0); }},
      {0, Side::right, [&](double x, double y) { return far_flux(x, y, 1, 0); }},
      {0, Side::bottom,
       [&](double x, double y) { return far_flux(x, y, 0, -1); }},
  };
  const std::vector<double> u = solve_neumann_laplace(mesh, loads);

  // Face integrals of the solution and of the reference far field;
  // integrating the Q2 trace exactly via Simpson weights per face cell.
  auto face_integrals = [&](int rect, Side side, double* length,
                            double* u_int, double* f_int) {
    std::vector<double> coords;
    const std::vector<int> ids = face_node_ids(mesh, rect, side, &coords);
    const RectMesh& rm = mesh.rects.at(rect);
    const bool horizontal = (side == Side::bottom || side == Side::top);
    const double fixed = horizontal
                             ? (side == Side::bottom ? rm.rect.y0 : rm.rect.y1)
                             : (side == Side::left ? rm.rect.x0 : rm.rect.x1);
    *length += coords.back() - coords.front();
    const int n_cells = (static_cast<int>(coords.size()) - 1) / 2;
    for (int c = 0; c < n_cells; ++c) {
      const double h = coords[2 * c + 2] - coords[2 * c];
      const double w[3] = {h / 6.0, 4.0 * h / 6.0, h / 6.0};
      for (int s = 0; s < 3; ++s) {
        const double t = coords[2 * c + s];
        const double x = horizontal ? t : fixed;
        const double y = horizontal ? fixed : t;
        *u_int += w[s] * u[ids[2 * c + s]];
        *f_int += w[s] * (-std::log(std::sqrt(x * x + y * y)) / kPi);
      }
    }
  };

  double far_len = 0.0, far_u = 0.0, far_f = 0.0;
  face_integrals(0, Side::left, &far_len, &far_u, &far_f);
  face_integrals(0, Side::right, &far_len, &far_u, &far_f);
  face_integrals(0, Side::bottom, &far_len, &far_u, &far_f);
  const double offset = (far_u - far_f) / far_len;

  double top_len = 0.0, top_u = 0.0, top_f = 0.0;
  face_integrals(1, Side::top, &top_len, &top_u, &top_f);
  const double mean_top = top_u / top_len;

  return mean_top - offset - H;
}

}  // namespace slitwave
