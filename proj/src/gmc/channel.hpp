#pragma once

#include <Eigen/Dense>
#include <utility>

#include "gmc/gaussian.hpp"

namespace gmc {

inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

/// Energy-preserving Gaussian unitary: a matrix that is both symplectic and
/// orthogonal. In blocked ordering it has the form [[A,B],[-B,A]] with A+iB
/// unitary.
struct SymplecticOrthogonal {
  int n = 0;
  Eigen::MatrixXd S;
  Ordering ordering = Ordering::blocked;

  static SymplecticOrthogonal identity(int n, Ordering ordering = Ordering::blocked);

  /// Builds [[A,B],[-B,A]] from the unitary A+iB; raises not_unitary otherwise.
  static SymplecticOrthogonal from_unitary_parts(const Eigen::MatrixXd& A,
                                                 const Eigen::MatrixXd& B,
                                                 Ordering target = Ordering::blocked,
                                                 double tol = kUnitaryTol);

  SymplecticOrthogonal converted(Ordering target) const;
  SymplecticOrthogonal transposed() const;  // group inverse
};

/// {max |S Omega Sᵀ - Omega|, max |Sᵀ S - I|}
std::pair<double, double> symplectic_orthogonal_residuals(const Eigen::MatrixXd& S, int n,
                                                          Ordering ordering);

/// Global phase rotation by theta on all n modes.
struct PhaseRotation {
  int n = 0;
  double theta = 0.0;

  Eigen::MatrixXd matrix(Ordering ordering) const;
  SymplecticOrthogonal symplectic(Ordering ordering = Ordering::blocked) const;
};

/// Gaussian channel triad (d, X, Y): (m, V) -> (X m + d, X V Xᵀ + Y).
struct GaussianChannel {
  int n = 0;
  Eigen::VectorXd d;
  Eigen::MatrixXd X, Y;
  Ordering ordering = Ordering::interleaved;

  static GaussianChannel create(Eigen::VectorXd d, Eigen::MatrixXd X, Eigen::MatrixXd Y,
                                Ordering ordering);
  static GaussianChannel identity(int n, Ordering ordering = Ordering::interleaved);
  static GaussianChannel unitary(const SymplecticOrthogonal& s);
};

struct ChannelValidity {
  bool valid = false;
  double min_eig = 0.0;  // smallest eigenvalue of the Hermitian CP matrix
};

GaussianState apply(const GaussianChannel& ch, const GaussianState& st);

/// Triad of second ∘ first.
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);

/// Complete positivity: Y ⪰ 0 and Y + (i/2)(Omega - X Omega Xᵀ) ⪰ 0, both up
/// to -tol on the smallest eigenvalue.
ChannelValidity validate(const GaussianChannel& ch, double tol = kPsdTol);

/// (0, D X E, D Y Dᵀ); requires a displacement-free channel.
GaussianChannel dress(const GaussianChannel& ch, const SymplecticOrthogonal& enc,
                      const SymplecticOrthogonal& dec);

struct DisplacementSplit {
  GaussianChannel channel;   // (0, X, Y)
  Eigen::VectorXd removed;   // the displacement that was dropped
};

DisplacementSplit eliminate_displacement(const GaussianChannel& ch);

GaussianChannel convert_ordering(const GaussianChannel& ch, Ordering target);

}  // namespace gmc
