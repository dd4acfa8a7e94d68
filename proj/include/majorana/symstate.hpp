#pragma once

// Permutation-symmetric n-qubit states in the Dicke basis and their Majorana
// point (MP) representation on the unit sphere.
//
// Conventions:
//   |eta(theta, phi)> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
//   |S(n,k)> is the normalized symmetric state with k excitations.
//   The Majorana polynomial is f(alpha) = sum_k sqrt(C(n,k)) a_k alpha^k with
//   alpha = e^{-i phi} tan(theta/2); each zero alpha_j marks the direction
//   orthogonal to one MP, so the MP sits at the antipode of that direction.
//   Roots at infinity (degree drop) place MPs at the north pole, roots at zero
//   place them at the south pole.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "majorana/roots.hpp"

namespace majorana {

using Vec3 = Eigen::Vector3d;

inline constexpr double pi = std::numbers::pi;
inline constexpr int max_qubits = 64;

/// Coefficient magnitude (relative to the largest) below which a Majorana
/// polynomial coefficient counts as zero when deflating roots at 0 and infinity.
inline constexpr double coefficient_drop_tol = 1e-13;
/// Default angular separation (radians) below which two MPs are coincident.
inline constexpr double default_degeneracy_tol = 1e-6;

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

inline std::vector<double> sqrt_binomials(int n) {
  std::vector<double> s(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(k)] = std::sqrt(binomial(n, k));
  return s;
}

/// Angle between two unit vectors, accurate for both tiny and near-pi separations.
inline double angular_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;

  Vec3 to_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  static SpherePoint from_vector(const Vec3& v) {
    const Vec3 u = v.normalized();
    SpherePoint p{std::atan2(std::hypot(u.x(), u.y()), u.z()), std::atan2(u.y(), u.x())};
    return p.canonical();
  }

  SpherePoint antipode() const { return SpherePoint{pi - theta, phi + pi}.canonical(); }

  // Ranges theta in [0, pi], phi in [0, 2 pi); phi = 0 at the poles.
  SpherePoint canonical() const {
    constexpr double pole_snap = 1e-14;
    SpherePoint p = *this;
    if (p.theta <= pole_snap) return {0.0, 0.0};
    if (p.theta >= pi - pole_snap) return {pi, 0.0};
    p.phi = std::fmod(p.phi, 2.0 * pi);
    if (p.phi < 0.0) p.phi += 2.0 * pi;
    if (p.phi >= 2.0 * pi) p.phi = 0.0;
    return p;
  }

  bool operator==(const SpherePoint&) const = default;
};

inline double angular_distance(const SpherePoint& a, const SpherePoint& b) {
  return angular_distance(a.to_vector(), b.to_vector());
}

/// Proper rotation of the sphere, stored as a unit quaternion.
class Rotation {
 public:
  Rotation() : q_(Eigen::Quaterniond::Identity()) {}

  static Rotation identity() { return {}; }

  static Rotation from_axis_angle(const Vec3& axis, double angle) {
    const double len = axis.norm();
    if (!(len > 0.0) || !std::isfinite(len)) throw std::invalid_argument("rotation axis must be a nonzero vector");
    return Rotation(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis / len)));
  }

  static Rotation from_matrix(const Eigen::Matrix3d& m) { return Rotation(Eigen::Quaterniond(m)); }

  static Rotation from_quaternion(const Eigen::Quaterniond& q) { return Rotation(q); }

  /// Rotation taking unit vector `from` onto unit vector `to` about their common normal.
  static Rotation aligning(const Vec3& from, const Vec3& to) {
    Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(from, to);
    return Rotation(q);
  }

  Vec3 apply(const Vec3& v) const { return q_ * v; }
  SpherePoint apply(const SpherePoint& p) const { return SpherePoint::from_vector(apply(p.to_vector())); }

  Rotation operator*(const Rotation& rhs) const { return Rotation(q_ * rhs.q_); }
  Rotation inverse() const { return Rotation(q_.conjugate()); }

  /// Angle in [0, pi]; the axis is then the direction of positive rotation.
  double angle() const {
    const double vn = q_.vec().norm();
    return 2.0 * std::atan2(vn, std::abs(q_.w()));
  }

  Vec3 axis() const {
    const double vn = q_.vec().norm();
    if (vn < 1e-300) return Vec3::UnitZ();
    const Vec3 v = q_.w() < 0 ? Vec3(-q_.vec()) : Vec3(q_.vec());
    return v / vn;
  }

  Eigen::Matrix3d matrix() const { return q_.toRotationMatrix(); }
  const Eigen::Quaterniond& quaternion() const { return q_; }

 private:
  explicit Rotation(const Eigen::Quaterniond& q) : q_(q.normalized()) {}
  Eigen::Quaterniond q_;
};

/// Normalized amplitudes a_0..a_n over the Dicke basis |S(n,k)>.
class SymmetricState {
 public:
  SymmetricState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (n_ < 1) throw std::invalid_argument("symmetric state needs n >= 1 qubits");
    if (amps_.size() != static_cast<std::size_t>(n_) + 1)
      throw std::invalid_argument("expected " + std::to_string(n_ + 1) + " Dicke amplitudes, got " +
                                  std::to_string(amps_.size()));
    double norm2 = 0.0;
    for (auto a : amps_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::invalid_argument("non-finite amplitude");
      norm2 += std::norm(a);
    }
    if (!(norm2 > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps_) a *= inv;
  }

  int n() const { return n_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  cplx operator[](int k) const { return amps_[static_cast<std::size_t>(k)]; }

  /// <this|other>
  cplx inner(const SymmetricState& other) const {
    if (other.n_ != n_) throw std::invalid_argument("inner product of states with different n");
    cplx s = 0.0;
    for (std::size_t k = 0; k < amps_.size(); ++k) s += std::conj(amps_[k]) * other.amps_[k];
    return s;
  }

  Eigen::VectorXcd vector() const {
    return Eigen::Map<const Eigen::VectorXcd>(amps_.data(), static_cast<Eigen::Index>(amps_.size()));
  }

 private:
  int n_;
  std::vector<cplx> amps_;
};

inline SymmetricState make_state(int n, std::vector<cplx> amps) { return SymmetricState(n, std::move(amps)); }

/// |<a|b>|, the ray fidelity.
inline double fidelity(const SymmetricState& a, const SymmetricState& b) { return std::abs(a.inner(b)); }

/// Multiset of n MPs plus a global phase. Points are canonicalized and sorted
/// by (theta, phi).
class MajoranaConfig {
 public:
  MajoranaConfig(std::vector<SpherePoint> points, double global_phase = 0.0)
      : points_(std::move(points)), phase_(global_phase) {
    if (points_.empty()) throw std::invalid_argument("Majorana configuration needs at least one point");
    for (auto& p : points_) {
      if (!std::isfinite(p.theta) || !std::isfinite(p.phi)) throw std::invalid_argument("non-finite MP angle");
      if (p.theta < -1e-12 || p.theta > pi + 1e-12)
        throw std::invalid_argument("MP polar angle outside [0, pi]");
      p.theta = std::clamp(p.theta, 0.0, pi);
      p = p.canonical();
    }
    std::sort(points_.begin(), points_.end(),
              [](const SpherePoint& a, const SpherePoint& b) { return a.theta != b.theta ? a.theta < b.theta : a.phi < b.phi; });
  }

  static MajoranaConfig from_vectors(std::span<const Vec3> vs, double global_phase = 0.0) {
    std::vector<SpherePoint> pts;
    pts.reserve(vs.size());
    for (const auto& v : vs) pts.push_back(SpherePoint::from_vector(v));
    return MajoranaConfig(std::move(pts), global_phase);
  }

  int n() const { return static_cast<int>(points_.size()); }
  std::span<const SpherePoint> points() const { return points_; }
  double global_phase() const { return phase_; }

  std::vector<Vec3> vectors() const {
    std::vector<Vec3> v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(p.to_vector());
    return v;
  }

  bool operator==(const MajoranaConfig& o) const { return points_ == o.points_; }

 private:
  std::vector<SpherePoint> points_;
  double phase_;
};

/// Multiset equality up to an angular tolerance (greedy nearest matching).
inline bool approx_equal(const MajoranaConfig& a, const MajoranaConfig& b, double tol) {
  if (a.n() != b.n()) return false;
  auto va = a.vectors();
  auto vb = b.vectors();
  std::vector<bool> used(vb.size(), false);
  for (const auto& x : va) {
    std::size_t best = vb.size();
    double best_d = tol;
    for (std::size_t j = 0; j < vb.size(); ++j) {
      if (used[j]) continue;
      const double dist = angular_distance(x, vb[j]);
      if (dist <= best_d) {
        best_d = dist;
        best = j;
      }
    }
    if (best == vb.size()) return false;
    used[best] = true;
  }
  return true;
}

/// f(alpha) = sum_k sqrt(C(n,k)) a_k alpha^k.
struct MajoranaPolynomial {
  std::vector<cplx> coeffs;
  int degree = 0;          // index of the highest coefficient above the drop tolerance
  int zero_multiplicity = 0;  // number of vanishing low-order coefficients (roots at alpha = 0)

  static MajoranaPolynomial from_state(const SymmetricState& s) {
    MajoranaPolynomial p;
    const int n = s.n();
    const auto sb = sqrt_binomials(n);
    p.coeffs.resize(static_cast<std::size_t>(n) + 1);
    double cmax = 0.0;
    for (int k = 0; k <= n; ++k) {
      p.coeffs[static_cast<std::size_t>(k)] = sb[static_cast<std::size_t>(k)] * s[k];
      cmax = std::max(cmax, std::abs(p.coeffs[static_cast<std::size_t>(k)]));
    }
    const double drop = coefficient_drop_tol * cmax;
    p.degree = n;
    while (p.degree > 0 && std::abs(p.coeffs[static_cast<std::size_t>(p.degree)]) <= drop) --p.degree;
    p.zero_multiplicity = 0;
    while (p.zero_multiplicity < p.degree && std::abs(p.coeffs[static_cast<std::size_t>(p.zero_multiplicity)]) <= drop)
      ++p.zero_multiplicity;
    return p;
  }

  int n() const { return static_cast<int>(coeffs.size()) - 1; }

  cplx operator()(cplx alpha) const { return detail::horner(coeffs, alpha); }

  /// Finite roots (including exact zeros), length = degree.
  std::vector<cplx> roots() const {
    std::vector<cplx> r(static_cast<std::size_t>(zero_multiplicity), cplx{0.0, 0.0});
    std::span<const cplx> core(coeffs.data() + zero_multiplicity,
                               static_cast<std::size_t>(degree - zero_multiplicity) + 1);
    auto rest = polynomial_roots(core);
    r.insert(r.end(), rest.begin(), rest.end());
    return r;
  }
};

namespace detail {

// MP for a finite polynomial root alpha: the zero direction has tan(theta/2) = |alpha|,
// phi = -arg(alpha); the MP is its antipode.
inline SpherePoint mp_from_root(cplx alpha) {
  const double r = std::abs(alpha);
  if (r == 0.0) return {pi, 0.0};
  return SpherePoint{2.0 * std::atan2(1.0, r), pi - std::arg(alpha)}.canonical();
}

inline std::vector<cplx> polynomial_from_points(std::span<const SpherePoint> pts) {
  // prod_i (cos(theta_i/2) + e^{i phi_i} sin(theta_i/2) alpha)
  std::vector<cplx> p{1.0};
  for (const auto& q : pts) {
    const cplx c0 = std::cos(q.theta / 2.0);
    const cplx c1 = std::polar(std::sin(q.theta / 2.0), q.phi);
    p.push_back(0.0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] = p[i] * c0 + p[i - 1] * c1;
    p[0] *= c0;
  }
  return p;
}

inline std::vector<cplx> dicke_from_points(std::span<const SpherePoint> pts) {
  const int n = static_cast<int>(pts.size());
  auto c = polynomial_from_points(pts);
  const auto sb = sqrt_binomials(n);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] /= sb[static_cast<std::size_t>(k)];
  return c;
}

}  // namespace detail

/// Dicke amplitudes of the symmetrized product of the MPs, times e^{i phase}.
inline SymmetricState to_dicke(const MajoranaConfig& config) {
  if (config.n() > max_qubits)
    throw std::invalid_argument("to_dicke supports at most " + std::to_string(max_qubits) + " MPs");
  auto amps = detail::dicke_from_points(config.points());
  const cplx ph = std::polar(1.0, config.global_phase());
  for (auto& a : amps) a *= ph;
  return SymmetricState(config.n(), std::move(amps));
}

/// MPs of a state. The global phase is chosen so that to_dicke reproduces the
/// state exactly (not only as a ray).
inline MajoranaConfig to_majorana(const SymmetricState& state) {
  const auto poly = MajoranaPolynomial::from_state(state);
  std::vector<SpherePoint> pts;
  pts.reserve(static_cast<std::size_t>(state.n()));
  for (int i = poly.degree; i < state.n(); ++i) pts.push_back({0.0, 0.0});
  for (auto r : poly.roots()) pts.push_back(detail::mp_from_root(r));
  MajoranaConfig unphased(std::move(pts), 0.0);
  const double phase = std::arg(to_dicke(unphased).inner(state));
  return MajoranaConfig(std::vector<SpherePoint>(unphased.points().begin(), unphased.points().end()), phase);
}

inline MajoranaConfig rotate(const MajoranaConfig& config, const Rotation& r) {
  std::vector<SpherePoint> pts;
  pts.reserve(config.points().size());
  for (const auto& p : config.points()) pts.push_back(r.apply(p));
  return MajoranaConfig(std::move(pts), config.global_phase());
}

/// Dicke coefficients of the coherent product state |eta(p)>^{(x)n}:
/// sqrt(C(n,k)) cos^{n-k}(theta/2) (e^{i phi} sin(theta/2))^k.
inline std::vector<cplx> coherent_coefficients(int n, const SpherePoint& p) {
  const auto sb = sqrt_binomials(n);
  const double c = std::cos(p.theta / 2.0);
  const cplx s = std::polar(std::sin(p.theta / 2.0), p.phi);
  std::vector<cplx> out(static_cast<std::size_t>(n) + 1);
  // Powers built from both ends to avoid 0^0 issues.
  std::vector<double> cp(static_cast<std::size_t>(n) + 1, 1.0);
  std::vector<cplx> sp(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) {
    cp[static_cast<std::size_t>(k)] = cp[static_cast<std::size_t>(k) - 1] * c;
    sp[static_cast<std::size_t>(k)] = sp[static_cast<std::size_t>(k) - 1] * s;
  }
  for (int k = 0; k <= n; ++k)
    out[static_cast<std::size_t>(k)] =
        sb[static_cast<std::size_t>(k)] * cp[static_cast<std::size_t>(n - k)] * sp[static_cast<std::size_t>(k)];
  return out;
}

/// <eta(p)|^{(x)n} |state>
inline cplx overlap_product(const SymmetricState& state, const SpherePoint& p) {
  const auto coh = coherent_coefficients(state.n(), p);
  cplx s = 0.0;
  for (int k = 0; k <= state.n(); ++k) s += std::conj(coh[static_cast<std::size_t>(k)]) * state[k];
  return s;
}

/// Group of coincident MPs.
struct PointCluster {
  Vec3 direction;
  int multiplicity = 0;
  std::vector<std::size_t> members;  // indices into MajoranaConfig::points()
};

/// Single-linkage clustering of MPs at angular separation <= tol. Clusters are
/// ordered by their first member.
inline std::vector<PointCluster> cluster_points(const MajoranaConfig& config, double tol = default_degeneracy_tol) {
  const auto v = config.vectors();
  const std::size_t n = v.size();
  std::vector<int> label(n, -1);
  std::vector<PointCluster> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    PointCluster cl;
    label[i] = static_cast<int>(out.size());
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      cl.members.push_back(a);
      for (std::size_t b = 0; b < n; ++b) {
        if (label[b] >= 0) continue;
        if (angular_distance(v[a], v[b]) <= tol) {
          label[b] = label[i];
          stack.push_back(b);
        }
      }
    }
    std::sort(cl.members.begin(), cl.members.end());
    Vec3 sum = Vec3::Zero();
    for (auto m : cl.members) sum += v[m];
    cl.direction = sum.normalized();
    cl.multiplicity = static_cast<int>(cl.members.size());
    out.push_back(std::move(cl));
  }
  return out;
}

}  // namespace majorana
