#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gmc {

/// Quadrature orderings of a 2n-dimensional phase-space vector:
/// interleaved is (q1,p1,...,qn,pn), blocked is (q1,...,qn,p1,...,pn).
enum class Ordering { interleaved, blocked };

const char* ordering_name(Ordering ordering);

/// Index map such that target[i] = source[perm[i]]. Involutive across the
/// two orderings; identity when from == to.
std::vector<Eigen::Index> ordering_permutation(int n, Ordering from, Ordering to);

Eigen::VectorXd convert_vector(const Eigen::VectorXd& v, int n, Ordering from, Ordering to);

/// P A Pᵀ as a pure index permutation (no arithmetic, bit-exact).
Eigen::MatrixXd convert_matrix(const Eigen::MatrixXd& a, int n, Ordering from, Ordering to);

/// The n-mode symplectic form in the given ordering.
Eigen::MatrixXd symplectic_form(int n, Ordering ordering);

/// Generator J of phase rotations, R(theta) = exp(theta J).
Eigen::MatrixXd rotation_generator(int n, Ordering ordering);

}  // namespace gmc
