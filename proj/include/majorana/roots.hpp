#pragma once

// Roots of dense complex polynomials: companion-matrix eigenvalues, a merge
// step for numerically split multiple roots, then Aberth-Ehrlich refinement.

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace majorana {

using cplx = std::complex<double>;

class root_finding_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Horner evaluation of f and f' for ascending coefficients.
inline void horner(std::span<const cplx> c, cplx x, cplx& f, cplx& df) {
  f = 0.0;
  df = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    df = df * x + f;
    f = f * x + c[i];
  }
}

inline cplx horner(std::span<const cplx> c, cplx x) {
  cplx f = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) f = f * x + c[i];
  return f;
}

inline double max_abs(std::span<const cplx> c) {
  double m = 0.0;
  for (auto v : c) m = std::max(m, std::abs(v));
  return m;
}

// Coefficients (ascending) of lead * prod_j (x - r_j).
inline std::vector<cplx> expand_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> p{lead};
  for (auto r : roots) {
    p.push_back(0.0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] = p[i - 1] - r * p[i];
    p[0] = -r * p[0];
  }
  return p;
}

inline double reconstruction_error(std::span<const cplx> coeffs, std::span<const cplx> roots) {
  auto p = expand_roots(roots, coeffs.back());
  double err = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) err = std::max(err, std::abs(p[i] - coeffs[i]));
  return err / max_abs(coeffs);
}

inline std::vector<cplx> companion_roots(std::span<const cplx> c) {
  const auto d = static_cast<Eigen::Index>(c.size() - 1);
  if (d == 1) return {-c[0] / c[1]};
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) m(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw root_finding_error("companion eigensolver did not converge");
  std::vector<cplx> r(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return r;
}

// Simultaneous Aberth-Ehrlich correction; a root is only moved if its residual improves.
inline void aberth_refine(std::span<const cplx> c, std::vector<cplx>& r, int max_sweeps = 12) {
  const std::size_t d = r.size();
  if (d < 2) return;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double largest_move = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      cplx f, df;
      horner(c, r[i], f, df);
      if (f == 0.0) continue;
      if (df == 0.0) continue;
      const cplx w = f / df;
      cplx s = 0.0;
      bool collide = false;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        const cplx diff = r[i] - r[j];
        if (diff == 0.0) {
          collide = true;
          break;
        }
        s += 1.0 / diff;
      }
      if (collide) continue;
      const cplx candidate = r[i] - w / (1.0 - w * s);
      if (!std::isfinite(candidate.real()) || !std::isfinite(candidate.imag())) continue;
      if (std::abs(horner(c, candidate)) < std::abs(f)) {
        largest_move = std::max(largest_move, std::abs(candidate - r[i]) / std::max(1.0, std::abs(r[i])));
        r[i] = candidate;
      }
    }
    if (largest_move < 1e-15) break;
  }
}

// Replace clusters of numerically split roots by their mean when that does not
// degrade the reconstruction of the polynomial. The mean of an m-fold cluster is
// accurate to O(eps) while the individual members only reach O(eps^(1/m)).
inline void merge_multiple_roots(std::span<const cplx> c, std::vector<cplx>& r, double radius = 1e-3) {
  const std::size_t d = r.size();
  if (d < 2) return;
  std::vector<int> label(d, -1);
  int next = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < d; ++b) {
        if (label[b] >= 0) continue;
        if (std::abs(r[a] - r[b]) <= radius * std::max(1.0, std::abs(r[a]))) {
          label[b] = next;
          stack.push_back(b);
        }
      }
    }
    ++next;
  }
  for (int cl = 0; cl < next; ++cl) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < d; ++i)
      if (label[i] == cl) members.push_back(i);
    if (members.size() < 2) continue;
    cplx mean = 0.0;
    for (auto i : members) mean += r[i];
    mean /= static_cast<double>(members.size());
    auto trial = r;
    for (auto i : members) trial[i] = mean;
    const double before = reconstruction_error(c, r);
    const double after = reconstruction_error(c, trial);
    if (after <= std::max(4.0 * before, 1e-13)) r = std::move(trial);
  }
}

}  // namespace detail

/// All roots of sum_k coeffs[k] x^k. The leading and trailing coefficients must
/// be nonzero (callers deflate roots at zero and infinity beforehand).
inline std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs) {
  if (coeffs.size() < 2) return {};
  if (coeffs.back() == 0.0 || coeffs.front() == 0.0)
    throw std::invalid_argument("polynomial_roots: leading and trailing coefficients must be nonzero");
  auto r = detail::companion_roots(coeffs);
  detail::merge_multiple_roots(coeffs, r);
  // Aberth polishes simple roots; it can scatter a multiple root, so keep its
  // result only if the root set still reconstructs the polynomial.
  auto polished = r;
  detail::aberth_refine(coeffs, polished);
  const double before = detail::reconstruction_error(coeffs, r);
  if (detail::reconstruction_error(coeffs, polished) <= std::max(4.0 * before, 1e-13)) r = std::move(polished);

  const double scale = detail::max_abs(coeffs);
  const auto d = static_cast<double>(coeffs.size() - 1);
  for (auto x : r) {
    const double bound = 1e-10 * scale * std::pow(std::max(1.0, std::abs(x)), d);
    const double res = std::abs(detail::horner(coeffs, x));
    if (!(res <= bound))
      throw root_finding_error("root residual " + std::to_string(res) + " exceeds tolerance " +
                               std::to_string(bound));
  }
  return r;
}

}  // namespace majorana
