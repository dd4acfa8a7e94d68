#pragma once

// Shared helpers for the test suites: random inputs and brute-force oracles
// that work in the full 2^n qubit space, independent of the Dicke/polynomial
// machinery they are used to check.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "majorana/symstate.hpp"

namespace majorana::testing {

inline SymmetricState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1);
  for (auto& x : a) x = {g(rng), g(rng)};
  return SymmetricState(n, std::move(a));
}

inline Rotation random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
  return Rotation::from_quaternion(q);
}

inline SpherePoint random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return SpherePoint::from_vector(Vec3(g(rng), g(rng), g(rng)));
}

inline SymmetricState dicke(int n, int k) {
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[static_cast<std::size_t>(k)] = 1.0;
  return SymmetricState(n, a);
}

// Full 2^n vector of a Dicke-basis state: amplitude of each bitstring with k
// ones is a_k / sqrt(C(n,k)). Bit i of the index is qubit i (1 = excited).
inline std::vector<cplx> expand_to_qubits(const SymmetricState& s) {
  const int n = s.n();
  std::vector<cplx> v(std::size_t{1} << n);
  for (std::size_t x = 0; x < v.size(); ++x) {
    const int k = std::popcount(x);
    v[x] = s[k] / std::sqrt(binomial(n, k));
  }
  return v;
}

// Literal sum over all n! orderings of |eta_1>...|eta_n>, projected back onto
// the Dicke basis and normalized.
inline std::vector<cplx> symmetrized_product_oracle(const std::vector<SpherePoint>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::array<cplx, 2>> eta;
  for (const auto& p : pts) eta.push_back({cplx(std::cos(p.theta / 2)), std::polar(std::sin(p.theta / 2), p.phi)});
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<cplx> full(std::size_t{1} << n, 0.0);
  do {
    for (std::size_t x = 0; x < full.size(); ++x) {
      cplx amp = 1.0;
      for (int q = 0; q < n; ++q) amp *= eta[static_cast<std::size_t>(perm[static_cast<std::size_t>(q)])][(x >> q) & 1U];
      full[x] += amp;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t x = 0; x < full.size(); ++x) {
    const int k = std::popcount(x);
    a[static_cast<std::size_t>(k)] += full[x] / std::sqrt(binomial(n, k));
  }
  double norm = 0;
  for (auto c : a) norm += std::norm(c);
  for (auto& c : a) c /= std::sqrt(norm);
  return a;
}

// <eta(p)|^{(x)n}|psi> evaluated in the 2^n space.
inline cplx product_overlap_oracle(const SymmetricState& s, const SpherePoint& p) {
  const auto v = expand_to_qubits(s);
  const cplx e0 = std::cos(p.theta / 2), e1 = std::polar(std::sin(p.theta / 2), p.phi);
  cplx acc = 0.0;
  for (std::size_t x = 0; x < v.size(); ++x) {
    cplx bra = 1.0;
    for (int q = 0; q < s.n(); ++q) bra *= std::conj(((x >> q) & 1U) ? e1 : e0);
    acc += bra * v[x];
  }
  return acc;
}

// Closed form for Dicke states, maximizing C(n,k) cos^{2(n-k)}(t/2) sin^{2k}(t/2) over t.
inline double dicke_lambda(int n, int k) {
  if (k == 0 || k == n) return 1.0;
  const double x = static_cast<double>(k) / n;
  return binomial(n, k) * std::pow(x, k) * std::pow(1.0 - x, n - k);
}

}  // namespace majorana::testing
