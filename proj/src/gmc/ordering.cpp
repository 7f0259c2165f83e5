#include "gmc/ordering.hpp"

#include "gmc/errors.hpp"

namespace gmc {

const char* ordering_name(Ordering ordering) {
  return ordering == Ordering::interleaved ? "interleaved" : "blocked";
}

std::vector<Eigen::Index> ordering_permutation(int n, Ordering from, Ordering to) {
  if (n <= 0) raise(Errc::invalid_argument, "mode count must be positive");
  std::vector<Eigen::Index> perm(2 * static_cast<std::size_t>(n));
  if (from == to) {
    for (Eigen::Index i = 0; i < 2 * n; ++i) perm[static_cast<std::size_t>(i)] = i;
    return perm;
  }
  if (to == Ordering::blocked) {
    // blocked slot k reads q_k, slot n+k reads p_k
    for (Eigen::Index k = 0; k < n; ++k) {
      perm[static_cast<std::size_t>(k)] = 2 * k;
      perm[static_cast<std::size_t>(n + k)] = 2 * k + 1;
    }
  } else {
    for (Eigen::Index k = 0; k < n; ++k) {
      perm[static_cast<std::size_t>(2 * k)] = k;
      perm[static_cast<std::size_t>(2 * k + 1)] = n + k;
    }
  }
  return perm;
}

Eigen::VectorXd convert_vector(const Eigen::VectorXd& v, int n, Ordering from, Ordering to) {
  if (v.size() != 2 * n) raise(Errc::dimension_mismatch, "vector length is not 2n");
  if (from == to) return v;
  const auto perm = ordering_permutation(n, from, to);
  Eigen::VectorXd out(2 * n);
  for (Eigen::Index i = 0; i < 2 * n; ++i) out(i) = v(perm[static_cast<std::size_t>(i)]);
  return out;
}

Eigen::MatrixXd convert_matrix(const Eigen::MatrixXd& a, int n, Ordering from, Ordering to) {
  if (a.rows() != 2 * n || a.cols() != 2 * n) raise(Errc::dimension_mismatch, "matrix is not 2n x 2n");
  if (from == to) return a;
  const auto perm = ordering_permutation(n, from, to);
  Eigen::MatrixXd out(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < 2 * n; ++i)
    for (Eigen::Index j = 0; j < 2 * n; ++j)
      out(i, j) = a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

Eigen::MatrixXd symplectic_form(int n, Ordering ordering) {
  if (n <= 0) raise(Errc::invalid_argument, "mode count must be positive");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  if (ordering == Ordering::interleaved) {
    for (Eigen::Index k = 0; k < n; ++k) {
      omega(2 * k, 2 * k + 1) = 1.0;
      omega(2 * k + 1, 2 * k) = -1.0;
    }
  } else {
    for (Eigen::Index k = 0; k < n; ++k) {
      omega(k, n + k) = 1.0;
      omega(n + k, k) = -1.0;
    }
  }
  return omega;
}

Eigen::MatrixXd rotation_generator(int n, Ordering ordering) {
  // J = -Omega in either ordering; kept separate for clarity at call sites.
  return -symplectic_form(n, ordering);
}

}  // namespace gmc
