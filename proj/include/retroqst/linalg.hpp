#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "retroqst/rng.hpp"

namespace retroqst {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Validation tolerances, roughly 100x double round-off at the dimensions
// handled here (d <= 16).
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueTol = 1e-10;

/// Reduce an angle into [0, 2*pi).
double wrap_angle(double theta);

/// Check the density-matrix contract (Hermitian, unit trace, PSD) without
/// throwing. On failure, if `why` is non-null it receives a diagnostic.
bool check_density(const Matrix& m, double trace_tol = kTraceTol,
                   double eig_tol = kEigenvalueTol, std::string* why = nullptr);

// Hermitian, positive semidefinite, unit-trace matrix. Construction
// validates; instances are immutable.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  const Matrix& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

// Hermitian idempotent matrix with a descriptive label
// ("z-up", "z-down", "eq(<angle>)", or a tensor-product composite).
class Projector {
 public:
  Projector(Matrix entries, std::string label);

  const Matrix& matrix() const { return entries_; }
  const std::string& label() const { return label_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
  std::string label_;
};

// U_theta = cos(theta/2) I + i sin(theta/2) sigma_z. The stored angle is
// reduced into [0, 2*pi); the matrix keeps the half-angle sign of the raw
// input, so U(2*pi) = -I (a global phase with identical conjugation action).
class PhaseUnitary {
 public:
  explicit PhaseUnitary(double theta);

  double angle() const { return angle_; }
  const Eigen::Matrix2cd& matrix() const { return entries_; }

 private:
  double angle_;
  Eigen::Matrix2cd entries_;
};

PhaseUnitary phase_rotation(double theta);

/// Projector |phi><phi| with sqrt(2)|phi> = |up> + e^{i phi}|down>.
/// Satisfies P(phi) + P(phi + pi) = I.
Projector equatorial_projector(double phi);

/// z-axis eigenprojectors: |up><up| (up = true) or |down><down|.
Projector z_projector(bool up);

/// Kronecker product of single-qubit projectors, in the given order.
Projector tensor_projectors(const std::vector<Projector>& factors);

/// Uhlmann fidelity tr sqrt(sqrt(a) b sqrt(a)), clamped to [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// G G^dag / tr(G G^dag) with G an i.i.d. standard-complex-normal matrix.
/// Full rank with probability one.
DensityMatrix random_ginibre_state(Eigen::Index dim, Rng& rng);

/// Euclidean projection of a real vector onto the unit simplex
/// {x : x_i >= 0, sum x_i = 1}.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v);

/// Eigendecompose h, project the spectrum onto the unit simplex, rebuild.
/// Inputs that are non-Hermitian beyond 1e-12 are rejected; smaller
/// asymmetries are symmetrized away first.
DensityMatrix project_spectrum_to_simplex(const Matrix& h);

/// Real Hilbert-Schmidt inner product Re tr(a^dag b). This is the inner
/// product used by every matrix-space geometry computation in the solvers.
double hs_inner(const Matrix& a, const Matrix& b);

/// Orthonormal (Hilbert-Schmidt) basis of traceless Hermitian matrices,
/// generalized Gell-Mann order. For dim = 2 this is {sigma_x, sigma_y,
/// sigma_z} / sqrt(2), i.e. a rescaled Bloch parametrization.
std::vector<Matrix> hermitian_basis(Eigen::Index dim);

/// Coordinates of rho in hermitian_basis(dim); rho = I/d + sum_k c_k B_k.
Eigen::VectorXd hermitian_coords(const Matrix& rho,
                                 const std::vector<Matrix>& basis);
Matrix from_hermitian_coords(const Eigen::VectorXd& coords,
                             const std::vector<Matrix>& basis);

}  // namespace retroqst
