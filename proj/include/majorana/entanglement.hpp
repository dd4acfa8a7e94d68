#pragma once

// Geometric measure of entanglement for symmetric states:
//   Lambda(psi) = max over directions p of |<eta(p)|^{(x)n}|psi>|^2,  E_G = -log2 Lambda.
// The maximization runs multi-start Newton ascent in a tangent chart that is
// re-centered at every iterate, so poles need no special treatment. An
// independent grid search with derivative-free polishing serves as oracle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "majorana/symstate.hpp"

namespace majorana {

struct OptimizerConfig {
  int num_starts = 32;
  int grid_resolution = 300;
  double tol_gradient = 1e-10;
  double tol_value = 1e-15;
  int max_iterations = 200;
  std::uint64_t seed = 0x6d616a6f72616e61ULL;
  int random_starts = 8;

  /// Defaults for an n-qubit state: max(32, n^2) lattice starts.
  static OptimizerConfig for_qubits(int n) {
    OptimizerConfig cfg;
    cfg.num_starts = std::max(32, n * n);
    return cfg;
  }

  void validate() const {
    if (num_starts <= 0 || grid_resolution <= 0 || !(tol_gradient > 0) || !(tol_value > 0) || max_iterations <= 0 ||
        random_starts < 0)
      throw std::invalid_argument("optimizer configuration values must be positive");
  }
};

struct EntanglementResult {
  double lambda = 0.0;
  double eg = 0.0;  // bits
  SpherePoint argmax_direction;
  int starts_used = 0;
  bool converged = false;
  double max_gradient_norm = 0.0;  // sphere-gradient norm of Lambda at the reported maximizer
};

inline double eg_from_lambda(double lambda) {
  const double e = -std::log2(lambda);
  return e <= 0.0 ? 0.0 : e;
}

namespace detail {

// Unit spinor (z0, z1) representing |eta> = z0|0> + z1|1>.
struct Spinor {
  cplx up;
  cplx down;

  static Spinor from_point(const SpherePoint& p) {
    return {std::cos(p.theta / 2.0), std::polar(std::sin(p.theta / 2.0), p.phi)};
  }

  static Spinor from_vector(const Vec3& v) { return from_point(SpherePoint::from_vector(v)); }

  SpherePoint to_point() const {
    const double th = 2.0 * std::atan2(std::abs(down), std::abs(up));
    const double ph = std::arg(down) - std::arg(up);
    return SpherePoint{th, ph}.canonical();
  }

  Spinor normalized() const {
    const double s = std::sqrt(std::norm(up) + std::norm(down));
    return {up / s, down / s};
  }

  // Retraction: move by tangent displacement (u, v) radians (first order).
  Spinor step(double u, double v) const {
    const cplx eps(u / 2.0, v / 2.0);
    return Spinor{up - eps * std::conj(down), down + eps * std::conj(up)}.normalized();
  }
};

// Second-order model of g = |<eta|^{(x)n}|psi>|^2 around a spinor in the chart
// z(s) = normalize(z + conj(s)/2 * z_perp), s = u - i v.
struct LocalModel {
  double value = 0.0;
  Eigen::Vector2d grad = Eigen::Vector2d::Zero();
  Eigen::Matrix2d hess = Eigen::Matrix2d::Zero();
};

// beta_k = sqrt(C(n,k)) a_k; the overlap is P(conj z) with P(w) = sum_k beta_k w0^{n-k} w1^k.
class OverlapFunction {
 public:
  explicit OverlapFunction(const SymmetricState& s) : n_(s.n()), beta_(static_cast<std::size_t>(s.n()) + 1) {
    const auto sb = sqrt_binomials(n_);
    for (int k = 0; k <= n_; ++k) beta_[static_cast<std::size_t>(k)] = sb[static_cast<std::size_t>(k)] * s[k];
  }

  int n() const { return n_; }

  double value(const Spinor& z) const {
    cplx p, p0, p1, p00, p01, p11;
    partials(z, p, p0, p1, p00, p01, p11, false);
    return std::norm(p);
  }

  LocalModel model(const Spinor& z) const {
    cplx p, p0, p1, p00, p01, p11;
    partials(z, p, p0, p1, p00, p01, p11, true);
    const cplx w0 = std::conj(z.up), w1 = std::conj(z.down);
    const cplx t0 = -std::conj(w1), t1 = std::conj(w0);
    const cplx d = p0 * t0 + p1 * t1;
    const cplx e = p00 * t0 * t0 + 2.0 * p01 * t0 * t1 + p11 * t1 * t1;
    const cplx b = std::conj(p) * d;
    const cplx c = std::conj(p) * e;
    const double kappa = (std::norm(d) - n_ * std::norm(p)) / 4.0;
    LocalModel m;
    m.value = std::norm(p);
    m.grad << b.real(), b.imag();
    m.hess << 2.0 * kappa + c.real() / 2.0, c.imag() / 2.0, c.imag() / 2.0, 2.0 * kappa - c.real() / 2.0;
    return m;
  }

 private:
  void partials(const Spinor& z, cplx& p, cplx& p0, cplx& p1, cplx& p00, cplx& p01, cplx& p11,
                bool derivs) const {
    const cplx w0 = std::conj(z.up), w1 = std::conj(z.down);
    const auto n = static_cast<std::size_t>(n_);
    std::vector<cplx> a(n + 1, 1.0), b(n + 1, 1.0);
    for (std::size_t j = 1; j <= n; ++j) {
      a[j] = a[j - 1] * w0;
      b[j] = b[j - 1] * w1;
    }
    p = p0 = p1 = p00 = p01 = p11 = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const cplx bk = beta_[k];
      if (bk == 0.0) continue;
      const std::size_t m = n - k;
      p += bk * a[m] * b[k];
      if (!derivs) continue;
      const double dm = static_cast<double>(m), dk = static_cast<double>(k);
      if (m >= 1) p0 += bk * dm * a[m - 1] * b[k];
      if (k >= 1) p1 += bk * dk * a[m] * b[k - 1];
      if (m >= 2) p00 += bk * dm * (dm - 1) * a[m - 2] * b[k];
      if (m >= 1 && k >= 1) p01 += bk * dm * dk * a[m - 1] * b[k - 1];
      if (k >= 2) p11 += bk * dk * (dk - 1) * a[m] * b[k - 2];
    }
  }

  int n_;
  std::vector<cplx> beta_;
};

struct AscentResult {
  Spinor z;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline AscentResult local_ascent(const OverlapFunction& f, Spinor z, const OptimizerConfig& cfg) {
  constexpr double max_step = 0.5;
  AscentResult out;
  LocalModel m = f.model(z);
  // acceptance compares values from the same evaluation path; the model's
  // value can differ from f.value by a few ulps
  double current = f.value(z);
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    const double gnorm = m.grad.norm();
    if (gnorm <= cfg.tol_gradient) break;

    // Newton step on the quadratic model, shifted to be negative definite.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m.hess);
    const double lmax = es.eigenvalues().maxCoeff();
    const double floor = 1e-8 * (1.0 + std::abs(es.eigenvalues().minCoeff()));
    Eigen::Matrix2d h = m.hess;
    if (lmax > -floor) h -= (lmax + floor) * Eigen::Matrix2d::Identity();
    Eigen::Vector2d step = -h.ldlt().solve(m.grad);
    if (!step.allFinite()) step = m.grad;
    if (step.norm() > max_step) step *= max_step / step.norm();

    // Close to a maximum the value changes by less than its rounding noise, so
    // short Newton steps are judged with a looser slack than long ones.
    const double slack = (step.norm() < 1e-6 ? 1e-12 : cfg.tol_value) * std::max(1.0, current);
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt) {
      const Spinor trial = z.step(step.x(), step.y());
      const double v = f.value(trial);
      if (v >= current - slack) {
        const bool improved = v > current;
        z = trial;
        current = v;
        m = f.model(z);
        moved = improved || bt == 0;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  out.z = z;
  out.value = m.value;
  out.grad_norm = m.grad.norm();
  out.iterations = it;
  out.converged = out.grad_norm <= cfg.tol_gradient;
  return out;
}

// Fibonacci lattice of `count` nearly uniform directions.
inline std::vector<Vec3> fibonacci_sphere(int count) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double golden = pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden * i;
    pts.emplace_back(r * std::cos(a), r * std::sin(a), z);
  }
  return pts;
}

inline std::vector<Vec3> start_directions(const SymmetricState& state, const OptimizerConfig& cfg) {
  auto starts = fibonacci_sphere(cfg.num_starts);
  starts.push_back(Vec3::UnitZ());
  starts.push_back(-Vec3::UnitZ());
  // MPs themselves (the overlap vanishes at their antipodes, so those are useless starts)
  // and the direction opposite to the MP centroid.
  const auto cfgm = to_majorana(state);
  Vec3 centroid = Vec3::Zero();
  for (const auto& v : cfgm.vectors()) {
    starts.push_back(v);
    centroid += v;
  }
  if (centroid.norm() > 1e-8) starts.push_back(-centroid.normalized());
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < cfg.random_starts; ++i) {
    Vec3 v(gauss(rng), gauss(rng), gauss(rng));
    if (v.norm() < 1e-12) v = Vec3::UnitX();
    starts.push_back(v.normalized());
  }
  return starts;
}

}  // namespace detail

/// Lambda and E_G by multi-start local ascent. Deterministic for a fixed config.
inline EntanglementResult geometric_measure(const SymmetricState& state, const OptimizerConfig& cfg) {
  cfg.validate();
  const detail::OverlapFunction f(state);
  const auto starts = detail::start_directions(state, cfg);
  detail::AscentResult best;
  best.value = -1.0;
  for (const auto& s : starts) {
    auto r = detail::local_ascent(f, detail::Spinor::from_vector(s), cfg);
    if (r.value > best.value) best = r;  // strict: ties keep the lowest start index
  }
  EntanglementResult res;
  res.lambda = std::min(1.0, best.value);
  res.eg = eg_from_lambda(res.lambda);
  res.argmax_direction = best.z.to_point();
  res.starts_used = static_cast<int>(starts.size());
  res.converged = best.converged;
  res.max_gradient_norm = best.grad_norm;
  return res;
}

inline EntanglementResult geometric_measure(const SymmetricState& state) {
  return geometric_measure(state, OptimizerConfig::for_qubits(state.n()));
}

/// Sphere gradient of log g in the orthonormal tangent chart at p. Exposed for
/// finite-difference verification.
inline Eigen::Vector2d log_overlap_gradient(const SymmetricState& state, const SpherePoint& p) {
  const detail::OverlapFunction f(state);
  const auto m = f.model(detail::Spinor::from_point(p));
  return m.grad / m.value;
}

/// The chart used by log_overlap_gradient: the direction reached from p by the
/// tangent displacement (u, v).
inline SpherePoint chart_point(const SpherePoint& p, double u, double v) {
  return detail::Spinor::from_point(p).step(u, v).to_point();
}

/// Brute-force oracle: equal-area grid of resolution^2 cells, then a
/// derivative-free pattern-search polish from the best cell. The grid spacing
/// only bounds the error heuristically (via the Lipschitz constant of the
/// overlap); the polish is what delivers precision.
inline EntanglementResult grid_oracle(const SymmetricState& state, int resolution) {
  if (resolution < 8) throw std::invalid_argument("grid_oracle needs resolution >= 8");
  auto g = [&](const Vec3& v) { return std::norm(overlap_product(state, SpherePoint::from_vector(v))); };

  Vec3 best_v = Vec3::UnitZ();
  double best = g(best_v);
  for (int i = 0; i < resolution; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / resolution;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < resolution; ++j) {
      const double a = 2.0 * pi * (j + 0.5) / resolution;
      const Vec3 v(r * std::cos(a), r * std::sin(a), z);
      const double val = g(v);
      if (val > best) {
        best = val;
        best_v = v;
      }
    }
  }

  double step = 2.0 / resolution;
  while (step > 1e-11) {
    Vec3 e1 = best_v.unitOrthogonal();
    Vec3 e2 = best_v.cross(e1);
    bool improved = false;
    for (int dir = 0; dir < 8; ++dir) {
      const double a = dir * pi / 4.0;
      const Vec3 trial = (best_v + step * (std::cos(a) * e1 + std::sin(a) * e2)).normalized();
      const double val = g(trial);
      if (val > best) {
        best = val;
        best_v = trial;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }

  EntanglementResult res;
  res.lambda = std::min(1.0, best);
  res.eg = eg_from_lambda(res.lambda);
  res.argmax_direction = SpherePoint::from_vector(best_v);
  res.starts_used = resolution * resolution;
  res.converged = true;
  // central differences of g in two tangent directions
  const double h = 1e-6;
  const Vec3 e1 = best_v.unitOrthogonal(), e2 = best_v.cross(e1);
  const double gx = (g((best_v + h * e1).normalized()) - g((best_v - h * e1).normalized())) / (2 * h);
  const double gy = (g((best_v + h * e2).normalized()) - g((best_v - h * e2).normalized())) / (2 * h);
  res.max_gradient_norm = std::hypot(gx, gy);
  return res;
}

/// |E_G(state) - E_G(rotated state)| with the rotation applied to the MPs.
inline double eg_invariance_check(const SymmetricState& state, const Rotation& r, const OptimizerConfig& cfg) {
  const auto rotated = to_dicke(rotate(to_majorana(state), r));
  return std::abs(geometric_measure(state, cfg).eg - geometric_measure(rotated, cfg).eg);
}

}  // namespace majorana
