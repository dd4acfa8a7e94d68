#pragma once

// Group-averaged separable states and the certificate that the geometric,
// relative and robustness measures coincide for a totally invariant state.
//
// The maximizing product state Phi = |p>^{(x)n} is twirled over the symmetry
// group of psi: omega = avg_g D(g) Phi D(g)^dagger. omega is a convex mixture
// of product states and therefore separable. If psi is invariant under the
// group, <psi|omega|psi> = Lambda and omega can be written as
//     omega = Lambda |psi><psi| + (1 - Lambda) Delta
// with Delta a density matrix; this is the form that forces the three measures
// to agree.
//
// Everything below lives in the (n+1)-dimensional symmetric subspace. Phi is a
// symmetric product state and U^{(x)n} preserves the subspace, so omega is
// supported there and so is Delta = (omega - Lambda |psi><psi|)/(1 - Lambda).
// Positivity of Delta is therefore checked on this block only. The argument
// that the components of the full-space decomposition outside the symmetric
// subspace stay positive is not re-verified here.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "majorana/entanglement.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/symstate.hpp"

namespace majorana {

/// (n+1)x(n+1) operator on the symmetric subspace in the Dicke basis
/// |S(n,0)>, ..., |S(n,n)>. Holds density matrices as well as the unitary
/// rotation matrices, so hermiticity is a query rather than an invariant.
struct SymmetricOperator {
  int n = 0;
  Eigen::MatrixXcd matrix;

  double trace() const { return matrix.trace().real(); }

  bool is_hermitian(double tol = 1e-12) const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  cplx expectation(const SymmetricState& s) const {
    if (s.n() != n) throw std::invalid_argument("operator and state have different qubit counts");
    const Eigen::VectorXcd v = s.vector();
    return v.dot(matrix * v);
  }
};

struct SpinMatrices {
  Eigen::MatrixXcd x, y, z;
};

/// Spin-n/2 matrices with J_z |S(n,k)> = (n/2 - k)|S(n,k)>; |0> is spin up.
inline SpinMatrices spin_matrices(int n) {
  if (n < 1 || n > max_qubits) throw std::invalid_argument("spin matrices need 1 <= n <= 64");
  const Eigen::Index d = n + 1;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k <= n; ++k) {
    jz(k, k) = n / 2.0 - k;
    if (k > 0) jp(k - 1, k) = std::sqrt(static_cast<double>(k) * (n - k + 1));  // raises m, lowers k
  }
  const Eigen::MatrixXcd jm = jp.adjoint();
  const cplx i(0.0, 1.0);
  return {(jp + jm) / 2.0, (jp - jm) / (2.0 * i), jz};
}

/// U^{(x)n} restricted to the symmetric subspace, D(r) = exp(-i angle (axis . J)).
/// The exponential is Eigen's scaling-and-squaring Pade implementation.
inline SymmetricOperator wigner_rotation(int n, const Rotation& r) {
  const auto j = spin_matrices(n);
  const double angle = r.angle();
  if (angle == 0.0) return {n, Eigen::MatrixXcd::Identity(n + 1, n + 1)};
  const Vec3 a = r.axis();
  const Eigen::MatrixXcd gen = cplx(0.0, -angle) * (a.x() * j.x + a.y() * j.y + a.z() * j.z);
  return {n, gen.exp()};
}

/// |p><p| for the symmetric product state with every qubit along p.
inline SymmetricOperator product_projector(int n, const SpherePoint& p) {
  const auto c = coherent_coefficients(n, p);
  Eigen::VectorXcd v(n + 1);
  for (int k = 0; k <= n; ++k) v(k) = c[static_cast<std::size_t>(k)];
  return {n, v * v.adjoint()};
}

namespace detail {

// Average of rho over rotations about `axis` (and, for O(2), over a half turn
// perpendicular to it): rotate the axis onto z, keep the Dicke diagonal, rotate back.
inline Eigen::MatrixXcd axial_average(const Eigen::MatrixXcd& rho, int n, const Vec3& axis, bool with_flip) {
  const Rotation to_z = Rotation::aligning(axis, Vec3::UnitZ());
  const Eigen::MatrixXcd d = wigner_rotation(n, to_z).matrix;
  const Eigen::MatrixXcd in_z = d * rho * d.adjoint();
  Eigen::VectorXcd diag = in_z.diagonal();
  // the flip maps |S(n,k)> to |S(n,n-k)> up to a phase
  if (with_flip) diag = (diag + Eigen::VectorXcd(diag.reverse())) / 2.0;
  for (auto& x : diag) x = x.real();
  const Eigen::MatrixXcd averaged = diag.asDiagonal();
  return d.adjoint() * averaged * d;
}

}  // namespace detail

/// Twirl of the product state along `direction` over the group in `group`.
inline SymmetricOperator group_average(const SpherePoint& direction, const SymmetryReport& group, int n) {
  const auto phi = product_projector(n, direction);
  switch (group.kind) {
    case GroupKind::so2:
    case GroupKind::o2:
      return {n, detail::axial_average(phi.matrix, n, group.axis, group.kind == GroupKind::o2)};
    case GroupKind::trivial:
    case GroupKind::so3_full:
      throw std::invalid_argument("group average not applicable to group " + group.label());
    default:
      break;
  }
  if (group.elements.empty()) throw std::invalid_argument("group report carries no elements");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (const auto& g : group.elements) {  // element order is canonical, so the sum is reproducible
    const Eigen::MatrixXcd d = wigner_rotation(n, g).matrix;
    sum += d * phi.matrix * d.adjoint();
  }
  return {n, sum / static_cast<double>(group.elements.size())};
}

struct TwirlCertificate {
  double lambda_claimed = 0.0;
  double overlap = 0.0;
  double delta_min_eig = 0.0;
  double delta_psi_component = 0.0;
  double delta_trace = 0.0;
  bool valid = false;
  std::string diagnostics;
};

inline constexpr double certificate_overlap_tol = 1e-6;
inline constexpr double certificate_delta_tol = 1e-9;

/// Builds omega and Delta for any state/group pair and reports the checks;
/// no precondition on the group. This is also the negative-control entry point.
inline TwirlCertificate build_certificate(const SymmetricState& state, double lambda, const SpherePoint& maximizer,
                                          const SymmetryReport& group) {
  if (!(lambda < 1.0)) throw std::invalid_argument("certificate undefined for Lambda = 1 (product state)");
  const int n = state.n();
  const auto omega = group_average(maximizer, group, n);
  const Eigen::VectorXcd psi = state.vector();

  TwirlCertificate c;
  c.lambda_claimed = lambda;
  c.overlap = psi.dot(omega.matrix * psi).real();
  const Eigen::MatrixXcd delta = (omega.matrix - lambda * psi * psi.adjoint()) / (1.0 - lambda);
  const Eigen::MatrixXcd herm = (delta + delta.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  c.delta_min_eig = es.eigenvalues().minCoeff();
  c.delta_psi_component = psi.dot(delta * psi).real();
  c.delta_trace = delta.trace().real();

  std::vector<std::string> failures;
  if (std::abs(c.overlap - lambda) > certificate_overlap_tol) failures.push_back("overlap differs from Lambda");
  if (c.delta_min_eig < -certificate_delta_tol) failures.push_back("Delta has a negative eigenvalue");
  if (std::abs(c.delta_psi_component) > certificate_delta_tol) failures.push_back("Delta has weight on psi");
  if (std::abs(c.delta_trace - 1.0) > certificate_delta_tol) failures.push_back("trace of Delta is not 1");
  c.valid = failures.empty();
  for (const auto& f : failures) c.diagnostics += (c.diagnostics.empty() ? "" : "; ") + f;
  if (c.valid) c.diagnostics = "omega = Lambda |psi><psi| + (1 - Lambda) Delta with Delta >= 0";
  return c;
}

/// Certificate for a totally invariant state with its computed maximal overlap.
inline TwirlCertificate certify_equivalence(const SymmetricState& state, const EntanglementResult& ent,
                                            const SymmetryReport& sym) {
  if (!sym.totally_invariant)
    throw std::invalid_argument("state is not totally invariant under " + sym.label() + ": " + sym.witness);
  if (!ent.converged) throw std::invalid_argument("entanglement optimisation did not converge");
  return build_certificate(state, ent.lambda, ent.argmax_direction, sym);
}

}  // namespace majorana
