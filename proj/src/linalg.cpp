#include "retroqst/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace retroqst {

double wrap_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("wrap_angle: non-finite angle");
  }
  double w = std::fmod(theta, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod rounding can land exactly on 2*pi
  return w;
}

bool check_density(const Matrix& m, double trace_tol, double eig_tol,
                   std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (m.rows() != m.cols() || m.rows() < 1) return fail("not square");
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    return fail("not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const double tr_err = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (tr_err > trace_tol) {
    return fail("trace not 1 (deviation " + std::to_string(tr_err) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -eig_tol) {
    return fail("negative eigenvalue " + std::to_string(min_eig));
  }
  return true;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  std::string why;
  if (!check_density(entries_, kTraceTol, kEigenvalueTol, &why)) {
    throw std::invalid_argument("DensityMatrix: " + why);
  }
}

Projector::Projector(Matrix entries, std::string label)
    : entries_(std::move(entries)), label_(std::move(label)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("Projector: not square");
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw std::invalid_argument("Projector: not Hermitian");
  }
  const double idem = (entries_ * entries_ - entries_).cwiseAbs().maxCoeff();
  if (idem > kHermitianTol) {
    throw std::invalid_argument("Projector: not idempotent");
  }
}

PhaseUnitary::PhaseUnitary(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("phase_rotation: non-finite angle");
  }
  angle_ = wrap_angle(theta);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  entries_ << Complex(c, s), Complex(0, 0), Complex(0, 0), Complex(c, -s);
}

PhaseUnitary phase_rotation(double theta) { return PhaseUnitary(theta); }

Projector equatorial_projector(double phi) {
  const double a = wrap_angle(phi);
  const Complex e(std::cos(a), std::sin(a));
  Matrix p(2, 2);
  p << 0.5, 0.5 * std::conj(e), 0.5 * e, 0.5;
  char label[32];
  std::snprintf(label, sizeof(label), "eq(%.9g)", a);
  return Projector(std::move(p), label);
}

Projector z_projector(bool up) {
  Matrix p = Matrix::Zero(2, 2);
  p(up ? 0 : 1, up ? 0 : 1) = 1.0;
  return Projector(std::move(p), up ? "z-up" : "z-down");
}

Projector tensor_projectors(const std::vector<Projector>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor_projectors: empty factor list");
  }
  for (const auto& f : factors) {
    if (f.dim() != 2) {
      throw std::invalid_argument("tensor_projectors: factors must be qubits");
    }
  }
  Matrix acc = factors.front().matrix();
  std::string label = factors.front().label();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = Eigen::kroneckerProduct(acc, factors[i].matrix()).eval();
    label += " (x) " + factors[i].label();
  }
  return Projector(std::move(acc), std::move(label));
}

namespace {

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const Matrix sa = psd_sqrt(a.matrix());
  const Matrix inner = sa * b.matrix() * sa;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (inner + inner.adjoint()),
                                           Eigen::EigenvaluesOnly);
  const double f = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(f, 0.0, 1.0);
}

DensityMatrix random_ginibre_state(Eigen::Index dim, Rng& rng) {
  if (dim < 2) {
    throw std::invalid_argument("random_ginibre_state: dim must be >= 2");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0;
  double tau = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumsum += u[k];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) tau = t;
  }
  return (v.array() - tau).cwiseMax(0.0);
}

DensityMatrix project_spectrum_to_simplex(const Matrix& h) {
  if (h.rows() != h.cols() || h.rows() < 1) {
    throw std::invalid_argument("project_spectrum_to_simplex: not square");
  }
  const double herm = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw std::invalid_argument(
        "project_spectrum_to_simplex: input non-Hermitian beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd lambda = project_to_simplex(es.eigenvalues());
  Matrix out = es.eigenvectors() * lambda.asDiagonal() *
               es.eigenvectors().adjoint();
  return DensityMatrix(std::move(out));
}

double hs_inner(const Matrix& a, const Matrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

std::vector<Matrix> hermitian_basis(Eigen::Index dim) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(dim * dim - 1));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      Matrix sym = Matrix::Zero(dim, dim);
      sym(i, j) = inv_sqrt2;
      sym(j, i) = inv_sqrt2;
      basis.push_back(std::move(sym));
      Matrix asym = Matrix::Zero(dim, dim);
      asym(i, j) = Complex(0, -inv_sqrt2);
      asym(j, i) = Complex(0, inv_sqrt2);
      basis.push_back(std::move(asym));
    }
  }
  for (Eigen::Index k = 1; k < dim; ++k) {
    Matrix d = Matrix::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (Eigen::Index i = 0; i < k; ++i) d(i, i) = norm;
    d(k, k) = -static_cast<double>(k) * norm;
    basis.push_back(std::move(d));
  }
  return basis;
}

Eigen::VectorXd hermitian_coords(const Matrix& rho,
                                 const std::vector<Matrix>& basis) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    c(static_cast<Eigen::Index>(k)) = hs_inner(basis[k], rho);
  }
  return c;
}

Matrix from_hermitian_coords(const Eigen::VectorXd& coords,
                             const std::vector<Matrix>& basis) {
  if (coords.size() != static_cast<Eigen::Index>(basis.size()) ||
      basis.empty()) {
    throw std::invalid_argument("from_hermitian_coords: size mismatch");
  }
  const Eigen::Index dim = basis.front().rows();
  Matrix h = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    h += coords(static_cast<Eigen::Index>(k)) * basis[k];
  }
  return h;
}

}  // namespace retroqst
