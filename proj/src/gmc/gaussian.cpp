#include "gmc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gmc/errors.hpp"

namespace gmc {

namespace {

void check_symmetric_shape(const Eigen::MatrixXd& V, double rel_tol, const char* who) {
  if (V.rows() != V.cols() || V.rows() == 0 || V.rows() % 2 != 0)
    raise(Errc::dimension_mismatch, std::string(who) + ": matrix must be 2n x 2n");
  if (!V.allFinite()) raise(Errc::invalid_argument, std::string(who) + ": non-finite entries");
  const double scale = std::max(1.0, V.cwiseAbs().maxCoeff());
  const double asym = (V - V.transpose()).cwiseAbs().maxCoeff();
  if (asym > rel_tol * scale)
    raise(Errc::not_symmetric, std::string(who) + ": asymmetry " + std::to_string(asym) +
                                   " above tolerance");
}

}  // namespace

CovarianceMatrix CovarianceMatrix::create(Eigen::MatrixXd V, Ordering ordering, double rel_tol) {
  check_symmetric_shape(V, rel_tol, "CovarianceMatrix");
  CovarianceMatrix cm;
  cm.n = static_cast<int>(V.rows() / 2);
  cm.V = 0.5 * (V + V.transpose()).eval();
  cm.ordering = ordering;
  return cm;
}

CovarianceMatrix convert_ordering(const CovarianceMatrix& cm, Ordering target) {
  if (cm.ordering == target) return cm;
  CovarianceMatrix out;
  out.n = cm.n;
  out.V = convert_matrix(cm.V, cm.n, cm.ordering, target);
  out.ordering = target;
  return out;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& V, Ordering ordering,
                                           double pairing_tol) {
  check_symmetric_shape(V, kSymmetryRelTol, "symplectic_eigenvalues");
  const int n = static_cast<int>(V.rows() / 2);
  const Eigen::MatrixXd Vs = 0.5 * (V + V.transpose());
  const Eigen::MatrixXd omega_v = symplectic_form(n, ordering) * Vs;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(omega_v, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    raise(Errc::pairing_failure, "eigensolver did not converge");

  const double scale = std::max(1.0, Vs.cwiseAbs().maxCoeff());
  const double tol = pairing_tol * scale;
  std::vector<double> moduli;
  moduli.reserve(2 * static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    const std::complex<double> lambda = solver.eigenvalues()(i);
    // A symmetric positive-definite V yields a purely imaginary spectrum;
    // a real part above tolerance signals an indefinite or degenerate input.
    if (std::abs(lambda.real()) > tol)
      raise(Errc::pairing_failure, "spectrum of Omega*V is not purely imaginary");
    moduli.push_back(std::abs(lambda.imag()));
  }
  std::sort(moduli.begin(), moduli.end());

  std::vector<double> nus;
  nus.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = moduli[2 * static_cast<std::size_t>(k)];
    const double b = moduli[2 * static_cast<std::size_t>(k) + 1];
    if (std::abs(a - b) > tol)
      raise(Errc::pairing_failure, "imaginary parts do not pair within tolerance");
    nus.push_back(0.5 * (a + b));
  }
  return nus;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm, double pairing_tol) {
  return symplectic_eigenvalues(cm.V, cm.ordering, pairing_tol);
}

double g_function(double x) {
  if (!(x >= 0.0)) raise(Errc::domain_error, "g is defined for x >= 0");
  if (x == 0.0) return 0.0;
  constexpr double inv_ln2 = 1.4426950408889634;
  return ((x + 1.0) * std::log1p(x) - x * std::log(x)) * inv_ln2;
}

double g_derivative(double t) {
  if (!(t >= 0.0)) raise(Errc::domain_error, "g' is defined for t >= 0");
  if (t == 0.0) return std::numeric_limits<double>::infinity();
  constexpr double inv_ln2 = 1.4426950408889634;
  return std::log1p(1.0 / t) * inv_ln2;
}

double entropy(const CovarianceMatrix& cm, double physical_tol) {
  double total = 0.0;
  for (double nu : symplectic_eigenvalues(cm)) {
    if (nu < 0.5 - physical_tol)
      raise(Errc::unphysical, "symplectic eigenvalue " + std::to_string(nu) + " below 1/2");
    total += g_function(std::max(nu - 0.5, 0.0));
  }
  return total;
}

bool is_physical(const CovarianceMatrix& cm, double tol) {
  const auto nus = symplectic_eigenvalues(cm);
  return nus.empty() || nus.front() >= 0.5 - tol;
}

}  // namespace gmc
