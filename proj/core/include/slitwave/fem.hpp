// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_FEM_HPP
#define SLITWAVE_FEM_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "slitwave/asymptotic.hpp"
#include "slitwave/geometry.hpp"
#include "slitwave/mesh.hpp"

namespace slitwave {

// Modal transparent boundary on one truncation cross-section.  The face
// carries the first `n_modes` transverse modes (constant plus cosine
// harmonics, orthonormal over the width-1 section); mode 0 propagates with
// axial wavenumber omega, the others decay at rate sqrt(k^2 pi^2 - omega^2).
struct DtnFace {
  int rect = 0;
  Side side = Side::left;
  bool incident = false;   // carries the incoming-wave forcing
  int n_modes = 15;
  double t0 = 0.0;         // transverse extent of the section
  double t1 = 1.0;
  double axial_coord = 0.0;      // position of the face along its axis
  double phase_reference = 0.0;  // axial coordinate the coefficient refers to

  double width() const { return t1 - t0; }
};

// The three faces of the standard truncation: Sigma_0 (incident, referenced
// to x = 0) and Sigma_-/Sigma_+ (referenced to the slit tops).
std::vector<DtnFace> make_dtn_faces(const DomainDescription& domain,
                                    int n_modes = 15);

// Real stiffness and mass triplets of the Neumann bilinear forms.
struct AssembledOperators {
  int n_nodes = 0;
  std::vector<Eigen::Triplet<double>> stiffness;
  std::vector<Eigen::Triplet<double>> mass;
};
AssembledOperators assemble_operators(const StructuredMesh& mesh);

// Helmholtz system stiffness - omega^2 mass in triplet form; walls are
// natural (Neumann).  The matrix stays complex symmetric under DtN terms.
struct HelmholtzSystem {
  int n_nodes = 0;
  double omega = 0.0;
  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  Eigen::VectorXcd rhs;
  bool dtn_applied = false;
};
HelmholtzSystem assemble(const StructuredMesh& mesh, double omega);

// Adds the modal DtN bilinear form of each face and, on the incident face,
// the forcing of the unit-amplitude incoming wave (amplitude 1 at the
// phase reference).
void apply_dtn(HelmholtzSystem& system, const StructuredMesh& mesh,
               const std::vector<DtnFace>& faces, double omega);

struct SolutionField {
  std::shared_ptr<const StructuredMesh> mesh;
  Eigen::VectorXcd values;       // per global node
  double solver_residual = 0.0;  // relative linear-system residual

  // Q2 interpolation at an arbitrary point (throws if outside the domain).
  std::complex<double> sample(double x, double y) const;
  // Max nodal |u| over one rectangle of the decomposition.
  double max_abs_in_rect(int rect_index) const;
};

// Sparse complex-symmetric direct factorization; throws SolveError on
// factorization failure or a relative residual above 1e-10.
SolutionField solve(const HelmholtzSystem& system,
                    std::shared_ptr<const StructuredMesh> mesh);

// Modal projection of the solved field onto the propagating mode of each
// face, back-propagated to the face's phase reference.  The incident face
// yields the reflection coefficient, the others the transmissions (in face
// order Sigma_-, Sigma_+).
ScatteringTriple extract_scattering(const SolutionField& field,
                                    const std::vector<DtnFace>& faces,
                                    double omega);

// Solver options mirroring the config-file keys.
struct FemOptions {
  double trunc_h = -1.0;      // < 0: |p_- - wall| + 2
  double trunc_v = 2.0;
  int n_dtn_modes = 15;
  double mesh_h0 = 0.05;
  double mesh_grading = 4.0;  // refinement factor near the slits
};

struct FemResult {
  ScatteringTriple triple;
  SolutionField field;
  std::vector<DtnFace> faces;
  int n_elements = 0;
  double seconds = 0.0;
};

// Full pipeline: domain, mesh, assembly, DtN, solve, extraction.
FemResult solve_waveguide(const WaveguideConfig& config,
                          const FemOptions& options = {});

// Inhomogeneous Neumann data on one rectangle edge.
struct NeumannLoad {
  int rect = 0;
  Side side = Side::left;
  std::function<double(double, double)> flux;
};

// Laplace solve with pure Neumann data (consistent total flux required);
// the solution is pinned to zero at the first global node.  Used by the
// truncated-domain junction-constant oracle.
std::vector<double> solve_neumann_laplace(const StructuredMesh& mesh,
                                          const std::vector<NeumannLoad>& loads);

}  // namespace slitwave

#endif  // SLITWAVE_FEM_HPP
