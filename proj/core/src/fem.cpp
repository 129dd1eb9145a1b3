// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/fem.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>

#include "slitwave/errors.hpp"
#include "slitwave/quadrature.hpp"

namespace slitwave {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

// Quadratic Lagrange shapes on [-1, 1] with nodes {-1, 0, 1}.
double shape1d(int a, double xi) {
  switch (a) {
    case 0: return 0.5 * xi * (xi - 1.0);
    case 1: return 1.0 - xi * xi;
    default: return 0.5 * xi * (xi + 1.0);
  }
}

double shape1d_deriv(int a, double xi) {
  switch (a) {
    case 0: return xi - 0.5;
    case 1: return -2.0 * xi;
    default: return xi + 0.5;
  }
}

struct ReferenceMatrices {
  std::array<std::array<double, 3>, 3> mass{};
  std::array<std::array<double, 3>, 3> stiffness{};
};

const ReferenceMatrices& reference_matrices() {
  static const ReferenceMatrices ref = [] {
    ReferenceMatrices r;
    const GaussRule& rule = gauss_legendre(3);  // exact through degree 5
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        double m = 0.0, k = 0.0;
        for (size_t q = 0; q < rule.nodes.size(); ++q) {
          const double xi = rule.nodes[q];
          const double w = rule.weights[q];
          // Shape products first: keeps [a][b] and [b][a] bitwise equal.
          m += w * (shape1d(a, xi) * shape1d(b, xi));
          k += w * (shape1d_deriv(a, xi) * shape1d_deriv(b, xi));
        }
        r.mass[a][b] = m;
        r.stiffness[a][b] = k;
      }
    }
    return r;
  }();
  return ref;
}

// 1D quadratic-element integrals of shape * mode over one face cell.
void accumulate_face_mode(const std::vector<double>& coords, int cell,
                          const std::function<double(double)>& mode,
                          std::array<double, 3>* out) {
  const double a = coords[2 * cell];
  const double b = coords[2 * cell + 2];
  const GaussRule& rule = gauss_legendre(10);
  out->fill(0.0);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (size_t q = 0; q < rule.nodes.size(); ++q) {
    const double xi = rule.nodes[q];
    const double t = mid + half * xi;
    const double w = rule.weights[q] * half;
    const double mval = mode(t);
    for (int s = 0; s < 3; ++s) (*out)[s] += w * shape1d(s, xi) * mval;
  }
}

// Integrals of every node shape on a face against a mode profile.
std::vector<double> face_mode_vector(const std::vector<double>& coords,
                                     const std::function<double(double)>& mode) {
  const int n_nodes = static_cast<int>(coords.size());
  const int n_cells = (n_nodes - 1) / 2;
  std::vector<double> q(n_nodes, 0.0);
  std::array<double, 3> cell_vals{};
  for (int c = 0; c < n_cells; ++c) {
    accumulate_face_mode(coords, c, mode, &cell_vals);
    for (int s = 0; s < 3; ++s) q[2 * c + s] += cell_vals[s];
  }
  return q;
}

std::complex<double> axial_wavenumber(int k, double omega, double width) {
  const double kt = k * kPi / width;
  if (kt < omega) return {omega, 0.0};  // only k = 0 for omega < pi
  return {0.0, std::sqrt(kt * kt - omega * omega)};
}

struct FaceModeData {
  std::vector<int> ids;
  std::vector<double> coords;
  // mode_integrals[k][i] = int phi_i psi_k ds along the face
  std::vector<std::vector<double>> mode_integrals;
};

FaceModeData build_face_modes(const StructuredMesh& mesh, const DtnFace& face) {
  FaceModeData data;
  data.ids = face_node_ids(mesh, face.rect, face.side, &data.coords);
  const double w = face.width();
  if (std::abs(data.coords.front() - face.t0) > 1e-12 ||
      std::abs((data.coords.back() - data.coords.front()) - w) > 1e-12) {
    throw MeshError("dtn face does not align with the mesh edge");
  }
  data.mode_integrals.reserve(face.n_modes);
  for (int k = 0; k < face.n_modes; ++k) {
    const double t0 = face.t0;
    auto mode = [k, t0, w](double t) {
      if (k == 0) return 1.0 / std::sqrt(w);
      return std::sqrt(2.0 / w) * std::cos(k * kPi * (t - t0) / w);
    };
    data.mode_integrals.push_back(face_mode_vector(data.coords, mode));
  }
  return data;
}

}  // namespace

std::vector<DtnFace> make_dtn_faces(const DomainDescription& domain,
                                    int n_modes) {
  if (n_modes < 1) throw DomainError("make_dtn_faces: n_modes must be >= 1");
  if (domain.rectangles.size() != 5) {
    throw DomainError("make_dtn_faces: expected the 5-rectangle domain");
  }
  const Rect& trunk = domain.rectangles[0];
  const Rect& chan_m = domain.rectangles[3];
  const Rect& chan_p = domain.rectangles[4];

  DtnFace sigma0;
  sigma0.rect = 0;
  sigma0.side = Side::left;
  sigma0.incident = true;
  sigma0.n_modes = n_modes;
  sigma0.t0 = trunk.y0;
  sigma0.t1 = trunk.y1;
  sigma0.axial_coord = trunk.x0;
  sigma0.phase_reference = 0.0;

  DtnFace sigma_m;
  sigma_m.rect = 3;
  sigma_m.side = Side::top;
  sigma_m.incident = false;
  sigma_m.n_modes = n_modes;
  sigma_m.t0 = chan_m.x0;
  sigma_m.t1 = chan_m.x1;
  sigma_m.axial_coord = chan_m.y1;
  sigma_m.phase_reference = chan_m.y0;  // slit top 1 + L^eps_-

  DtnFace sigma_p = sigma_m;
  sigma_p.rect = 4;
  sigma_p.t0 = chan_p.x0;
  sigma_p.t1 = chan_p.x1;
  sigma_p.axial_coord = chan_p.y1;
  sigma_p.phase_reference = chan_p.y0;

  return {sigma0, sigma_m, sigma_p};
}

AssembledOperators assemble_operators(const StructuredMesh& mesh) {
  AssembledOperators ops;
  ops.n_nodes = mesh.n_nodes();
  ops.stiffness.reserve(mesh.n_elements() * 81);
  ops.mass.reserve(mesh.n_elements() * 81);
  const ReferenceMatrices& ref = reference_matrices();

  for (const RectMesh& rm : mesh.rects) {
    for (int j = 0; j < rm.ny_cells(); ++j) {
      const double hy = rm.y_lines[j + 1] - rm.y_lines[j];
      for (int i = 0; i < rm.nx_cells(); ++i) {
        const double hx = rm.x_lines[i + 1] - rm.x_lines[i];
        const double kx = hy / hx;   // d/dx stiffness scale
        const double ky = hx / hy;   // d/dy stiffness scale
        const double mm = hx * hy / 4.0;
        for (int b = 0; b < 3; ++b) {
          for (int a = 0; a < 3; ++a) {
            const int row = rm.node_id(2 * i + a, 2 * j + b);
            for (int d = 0; d < 3; ++d) {
              for (int c = 0; c < 3; ++c) {
                const int col = rm.node_id(2 * i + c, 2 * j + d);
                const double k_val = kx * ref.stiffness[a][c] * ref.mass[b][d] +
                                     ky * ref.mass[a][c] * ref.stiffness[b][d];
                const double m_val = mm * ref.mass[a][c] * ref.mass[b][d];
                ops.stiffness.emplace_back(row, col, k_val);
                ops.mass.emplace_back(row, col, m_val);
              }
            }
          }
        }
      }
    }
  }
  return ops;
}

HelmholtzSystem assemble(const StructuredMesh& mesh, double omega) {
  if (!(omega > 0.0)) throw DomainError("assemble: omega must be positive");
  const AssembledOperators ops = assemble_operators(mesh);
  HelmholtzSystem system;
  system.n_nodes = ops.n_nodes;
  system.omega = omega;
  system.entries.reserve(ops.stiffness.size());
  const double w2 = omega * omega;
  for (size_t i = 0; i < ops.stiffness.size(); ++i) {
    const auto& k = ops.stiffness[i];
    const auto& m = ops.mass[i];
    system.entries.emplace_back(k.row(), k.col(),
                                std::complex<double>(k.value() - w2 * m.value(), 0.0));
  }
  system.rhs = Eigen::VectorXcd::Zero(system.n_nodes);
  return system;
}

void apply_dtn(HelmholtzSystem& system, const StructuredMesh& mesh,
               const std::vector<DtnFace>& faces, double omega) {
  if (omega != system.omega) {
    throw MismatchError("apply_dtn: omega differs from the assembled system");
  }
  for (const DtnFace& face : faces) {
    if (!(face.width() > 0.0)) throw DomainError("apply_dtn: empty face");
    const FaceModeData data = build_face_modes(mesh, face);
    const int nf = static_cast<int>(data.ids.size());
    for (int k = 0; k < face.n_modes; ++k) {
      const std::complex<double> beta =
          axial_wavenumber(k, omega, face.width());
      const std::complex<double> coef = -kI * beta;
      const std::vector<double>& q = data.mode_integrals[k];
      for (int i = 0; i < nf; ++i) {
        if (q[i] == 0.0) continue;
        for (int j = 0; j < nf; ++j) {
          if (q[j] == 0.0) continue;
          // q_i * q_j first keeps the (i,j)/(j,i) values bitwise equal.
          const double qq = q[i] * q[j];
          system.entries.emplace_back(data.ids[i], data.ids[j], coef * qq);
        }
      }
    }
    if (face.incident) {
      // Incoming wave with unit amplitude at the phase reference; its trace
      // on the face is the constant ref_phase, so the DtN forcing
      // g = d_nu u_inc - Lambda u_inc = -2 i omega ref_phase.
      const std::complex<double> ref_phase =
          std::exp(kI * omega * (face.axial_coord - face.phase_reference));
      const std::complex<double> g = -2.0 * kI * omega * ref_phase;
      const std::vector<double>& q0 = data.mode_integrals[0];
      for (int i = 0; i < nf; ++i) {
        // int g phi_i ds = g sqrt(w) q0_i since psi_0 = 1/sqrt(w).
        system.rhs[data.ids[i]] += g * std::sqrt(face.width()) * q0[i];
      }
    }
  }
  system.dtn_applied = true;
}

std::complex<double> SolutionField::sample(double x, double y) const {
  for (const RectMesh& rm : mesh->rects) {
    if (!rm.rect.contains(x, y)) continue;
    const auto locate = [](const std::vector<double>& lines, double v) {
      auto it = std::upper_bound(lines.begin(), lines.end(), v);
      int cell = static_cast<int>(it - lines.begin()) - 1;
      cell = std::clamp(cell, 0, static_cast<int>(lines.size()) - 2);
      return cell;
    };
    const int i = locate(rm.x_lines, x);
    const int j = locate(rm.y_lines, y);
    const double xi =
        2.0 * (x - rm.x_lines[i]) / (rm.x_lines[i + 1] - rm.x_lines[i]) - 1.0;
    const double eta =
        2.0 * (y - rm.y_lines[j]) / (rm.y_lines[j + 1] - rm.y_lines[j]) - 1.0;
    std::complex<double> value = 0.0;
    for (int b = 0; b < 3; ++b) {
      for (int a = 0; a < 3; ++a) {
        value += values[rm.node_id(2 * i + a, 2 * j + b)] * shape1d(a, xi) *
                 shape1d(b, eta);
      }
    }
    return value;
  }
  throw DomainError("SolutionField::sample: point outside the domain");
}

double SolutionField::max_abs_in_rect(int rect_index) const {
  const RectMesh& rm = mesh->rects.at(rect_index);
  double peak = 0.0;
  for (int id : rm.node_ids) peak = std::max(peak, std::abs(values[id]));
  return peak;
}

SolutionField solve(const HelmholtzSystem& system,
                    std::shared_ptr<const StructuredMesh> mesh) {
  Eigen::SparseMatrix<std::complex<double>> A(system.n_nodes, system.n_nodes);
  A.setFromTriplets(system.entries.begin(), system.entries.end());
  A.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<std::complex<double>>> lu;
  lu.analyzePattern(A);
  lu.factorize(A);
  if (lu.info() != Eigen::Success) {
    throw SolveError("solve: sparse LU factorization failed (" +
                     std::to_string(system.n_nodes) + " unknowns)");
  }
  SolutionField field;
  field.mesh = std::move(mesh);
  field.values = lu.solve(system.rhs);
  const double rhs_norm = system.rhs.norm();
  if (rhs_norm > 0.0) {
    field.solver_residual = (A * field.values - system.rhs).norm() / rhs_norm;
  }
  if (!std::isfinite(field.solver_residual) ||
      field.solver_residual > 1e-10) {
    throw SolveError("solve: relative residual " +
                     std::to_string(field.solver_residual) +
                     " exceeds 1e-10");
  }
  return field;
}

ScatteringTriple extract_scattering(const SolutionField& field,
                                    const std::vector<DtnFace>& faces,
                                    double omega) {
  std::complex<double> r = 0.0;
  std::vector<std::complex<double>> transmissions;
  bool have_incident = false;

  for (const DtnFace& face : faces) {
    const FaceModeData data = build_face_modes(*field.mesh, face);
    const std::vector<double>& q0 = data.mode_integrals[0];
    std::complex<double> coeff = 0.0;
    for (size_t i = 0; i < data.ids.size(); ++i) {
      coeff += q0[i] * field.values[data.ids[i]];
    }
    const double dist = std::abs(face.axial_coord - face.phase_reference);
    const std::complex<double> back = std::exp(-kI * omega * dist);
    if (face.incident) {
      const std::complex<double> inc_coeff =
          std::exp(kI * omega * (face.axial_coord - face.phase_reference)) *
          std::sqrt(face.width());
      r = (coeff - inc_coeff) * back;
      have_incident = true;
    } else {
      transmissions.push_back(coeff * back);
    }
  }
  if (!have_incident || transmissions.size() != 2) {
    throw DomainError(
        "extract_scattering: expected one incident and two outgoing faces");
  }
  // Face order is Sigma_0, Sigma_-, Sigma_+.
  return make_scattering_triple(r, transmissions[1], transmissions[0]);
}

FemResult solve_waveguide(const WaveguideConfig& config,
                          const FemOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const double trunc_h =
      options.trunc_h > 0.0 ? options.trunc_h : default_trunc_h(config);
  const DomainDescription domain =
      build_domain(config, trunc_h, options.trunc_v);
  auto mesh = std::make_shared<StructuredMesh>(
      build_mesh(domain, options.mesh_h0, options.mesh_grading));
  const std::vector<DtnFace> faces =
      make_dtn_faces(domain, options.n_dtn_modes);

  HelmholtzSystem system = assemble(*mesh, config.omega);
  apply_dtn(system, *mesh, faces, config.omega);

  FemResult result;
  result.n_elements = mesh->n_elements();
  result.field = solve(system, mesh);
  result.triple = extract_scattering(result.field, faces, config.omega);
  result.faces = faces;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<double> solve_neumann_laplace(const StructuredMesh& mesh,
                                          const std::vector<NeumannLoad>& loads) {
  const AssembledOperators ops = assemble_operators(mesh);
  const int n = ops.n_nodes;

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (const NeumannLoad& load : loads) {
    std::vector<double> coords;
    const std::vector<int> ids =
        face_node_ids(mesh, load.rect, load.side, &coords);
    const RectMesh& rm = mesh.rects.at(load.rect);
    const bool horizontal =
        (load.side == Side::bottom || load.side == Side::top);
    const double fixed = [&] {
      switch (load.side) {
        case Side::left: return rm.rect.x0;
        case Side::right: return rm.rect.x1;
        case Side::bottom: return rm.rect.y0;
        default: return rm.rect.y1;
      }
    }();
    auto flux_on_face = [&](double t) {
      return horizontal ? load.flux(t, fixed) : load.flux(fixed, t);
    };
    const std::vector<double> q = face_mode_vector(coords, flux_on_face);
    for (size_t i = 0; i < ids.size(); ++i) rhs[ids[i]] += q[i];
  }

  // Pin the first node to remove the constant null space.
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(ops.stiffness.size() + 1);
  for (const auto& t : ops.stiffness) {
    if (t.row() == 0 || t.col() == 0) continue;
    entries.push_back(t);
  }
  entries.emplace_back(0, 0, 1.0);
  rhs[0] = 0.0;

  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(entries.begin(), entries.end());
  A.makeCompressed();
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
  if (ldlt.info() != Eigen::Success) {
    throw SolveError("solve_neumann_laplace: factorization failed");
  }
  const Eigen::VectorXd u = ldlt.solve(rhs);
  return {u.data(), u.data() + n};
}

}  // namespace slitwave
