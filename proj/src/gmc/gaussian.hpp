#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gmc/ordering.hpp"

namespace gmc {

inline constexpr double kSymmetryRelTol = 1e-12;
inline constexpr double kPairingTol = 1e-9;
inline constexpr double kPhysicalTol = 1e-9;

/// Second moments of an n-mode Gaussian state. Vacuum convention: V = I/2,
/// physicality <=> every symplectic eigenvalue >= 1/2.
struct CovarianceMatrix {
  int n = 0;
  Eigen::MatrixXd V;
  Ordering ordering = Ordering::interleaved;

  /// Checks the shape and symmetry (relative tolerance), stores (V+Vᵀ)/2.
  static CovarianceMatrix create(Eigen::MatrixXd V, Ordering ordering,
                                 double rel_tol = kSymmetryRelTol);
};

struct GaussianState {
  Eigen::VectorXd mean;
  CovarianceMatrix cov;
};

CovarianceMatrix convert_ordering(const CovarianceMatrix& cm, Ordering target);

/// Symplectic eigenvalues from the spectrum of Omega*V, ascending, one
/// representative per +-i nu pair. Raises pairing_failure when the spectrum
/// is not (numerically) purely imaginary in conjugate pairs.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cm,
                                           double pairing_tol = kPairingTol);
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& V, Ordering ordering,
                                           double pairing_tol = kPairingTol);

/// g(x) = (x+1)log2(x+1) - x log2(x), continuously extended with g(0) = 0.
double g_function(double x);

/// g'(t) = log2((t+1)/t); +inf at t = 0.
double g_derivative(double t);

/// Von Neumann entropy in bits: sum of g(nu_k - 1/2).
double entropy(const CovarianceMatrix& cm, double physical_tol = kPhysicalTol);

bool is_physical(const CovarianceMatrix& cm, double tol = kPhysicalTol);

}  // namespace gmc
