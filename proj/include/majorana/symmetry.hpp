#pragma once

// Rotational point symmetry of MP configurations and the total-invariance
// catalog: which invariant configurations lose their symmetry under every small
// displacement of the points.

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "majorana/symstate.hpp"

namespace majorana {

enum class GroupKind { trivial, cyclic, dihedral, tetrahedral, octahedral, icosahedral, so2, o2, so3_full };

/// Largest known n for totally invariant configurations of the polyhedral groups.
inline constexpr int tetrahedral_max_n = 34;
inline constexpr int octahedral_max_n = 34;
inline constexpr int icosahedral_max_n = 88;

/// Per-orbit multiplicity limits of the polyhedral catalogs.
struct PolyhedralLimits {
  static constexpr int tetrahedron = 2;  // T: each of the two tetrahedral orbits
  static constexpr int t_octahedron = 3;  // T: octahedron vertices
  static constexpr int o_cube = 3;
  static constexpr int o_octahedron = 2;
  static constexpr int y_icosahedron = 3;
  static constexpr int y_dodecahedron = 2;
};

struct SymmetryReport {
  GroupKind kind = GroupKind::trivial;
  int m = 1;                 // order of C_m / D_m
  Vec3 axis = Vec3::UnitZ();  // principal axis (C_m, D_m, SO(2), O(2), SO(3) degenerate point)
  std::vector<Rotation> generators;
  std::vector<Rotation> elements;  // full element list of finite groups, identity first
  bool totally_invariant = false;
  std::string witness;
  double tol = default_degeneracy_tol;

  bool finite() const {
    return kind != GroupKind::so2 && kind != GroupKind::o2 && kind != GroupKind::so3_full;
  }

  std::string label() const {
    switch (kind) {
      case GroupKind::trivial: return "Trivial";
      case GroupKind::cyclic: return "C" + std::to_string(m);
      case GroupKind::dihedral: return "D" + std::to_string(m);
      case GroupKind::tetrahedral: return "T";
      case GroupKind::octahedral: return "O";
      case GroupKind::icosahedral: return "Y";
      case GroupKind::so2: return "SO(2)";
      case GroupKind::o2: return "O(2)";
      case GroupKind::so3_full: return "SO(3)";
    }
    return "?";
  }
};

struct InvarianceVerdict {
  bool totally_invariant = false;
  std::string witness;
};

namespace detail {

// Canonical sign for an axis: first nonzero component (z, then x, then y) positive.
inline Vec3 canonical_axis(Vec3 a) {
  a.normalize();
  constexpr double eps = 1e-12;
  if (a.z() < -eps || (std::abs(a.z()) <= eps && (a.x() < -eps || (std::abs(a.x()) <= eps && a.y() < 0)))) a = -a;
  return a;
}

inline bool same_axis(const Vec3& a, const Vec3& b, double tol) {
  return std::min(angular_distance(a, b), angular_distance(a, -b)) <= tol;
}

inline bool same_rotation(const Rotation& a, const Rotation& b, double tol) {
  return std::abs(a.quaternion().dot(b.quaternion())) >= std::cos(tol / 2.0);
}

// Does r map every cluster onto a cluster of equal multiplicity?
inline bool preserves(const std::vector<PointCluster>& cl, const Rotation& r, double tol) {
  for (const auto& c : cl) {
    const Vec3 img = r.apply(c.direction);
    bool hit = false;
    for (const auto& d : cl) {
      if (d.multiplicity == c.multiplicity && angular_distance(img, d.direction) <= tol) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

inline Eigen::Matrix3d frame(const Vec3& a, const Vec3& b) {
  const Vec3 e1 = a.normalized();
  const Vec3 e2 = (b - b.dot(e1) * e1).normalized();
  Eigen::Matrix3d f;
  f.col(0) = e1;
  f.col(1) = e2;
  f.col(2) = e1.cross(e2);
  return f;
}

inline void sort_rotations(std::vector<Rotation>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const Rotation& x, const Rotation& y) {
    const double ax = x.angle(), ay = y.angle();
    if (std::abs(ax - ay) > 1e-9) return ax < ay;
    const Vec3 u = canonical_axis(x.axis()), v = canonical_axis(y.axis());
    for (int i : {2, 0, 1})
      if (std::abs(u[i] - v[i]) > 1e-9) return u[i] > v[i];
    return false;
  });
}

// All proper rotations permuting a non-collinear cluster set.
inline std::vector<Rotation> finite_symmetries(const std::vector<PointCluster>& cl, double tol) {
  // Reference cluster: rarest multiplicity (fewest candidate images).
  auto count_mult = [&](int m) {
    return std::count_if(cl.begin(), cl.end(), [m](const PointCluster& c) { return c.multiplicity == m; });
  };
  std::size_t ia = 0;
  for (std::size_t i = 1; i < cl.size(); ++i)
    if (count_mult(cl[i].multiplicity) < count_mult(cl[ia].multiplicity)) ia = i;
  std::size_t ib = cl.size();
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (i == ia || same_axis(cl[i].direction, cl[ia].direction, 10 * tol)) continue;
    if (ib == cl.size() || count_mult(cl[i].multiplicity) < count_mult(cl[ib].multiplicity)) ib = i;
  }
  if (ib == cl.size()) throw std::logic_error("finite_symmetries called on a collinear configuration");

  const Vec3 a = cl[ia].direction, b = cl[ib].direction;
  const double ab = angular_distance(a, b);
  const Eigen::Matrix3d f = frame(a, b);
  std::vector<Rotation> out;
  for (const auto& ca : cl) {
    if (ca.multiplicity != cl[ia].multiplicity) continue;
    for (const auto& cb : cl) {
      if (cb.multiplicity != cl[ib].multiplicity) continue;
      if (std::abs(angular_distance(ca.direction, cb.direction) - ab) > 10 * tol) continue;
      const Eigen::Matrix3d r = frame(ca.direction, cb.direction) * f.transpose();
      const Rotation rot = Rotation::from_matrix(r);
      if (!preserves(cl, rot, tol)) continue;
      bool dup = false;
      for (const auto& e : out) dup = dup || same_rotation(e, rot, 10 * tol);
      if (!dup) out.push_back(rot);
    }
  }
  sort_rotations(out);
  return out;
}

struct AxisClass {
  Vec3 axis;
  int order = 1;
};

inline std::vector<AxisClass> rotation_axes(const std::vector<Rotation>& elements, double tol) {
  std::vector<AxisClass> axes;
  for (const auto& g : elements) {
    if (g.angle() < 10 * tol) continue;
    const Vec3 ax = g.axis();
    bool found = false;
    for (auto& a : axes) {
      if (same_axis(a.axis, ax, 10 * tol)) {
        ++a.order;
        found = true;
        break;
      }
    }
    if (!found) axes.push_back({canonical_axis(ax), 2});
  }
  return axes;
}

inline std::size_t closure_size(const std::vector<Rotation>& gens, std::size_t limit, double tol) {
  std::vector<Rotation> set{Rotation::identity()};
  for (std::size_t i = 0; i < set.size() && set.size() <= limit; ++i) {
    for (const auto& g : gens) {
      const Rotation p = g * set[i];
      bool dup = false;
      for (const auto& e : set) dup = dup || same_rotation(e, p, tol);
      if (!dup) set.push_back(p);
    }
  }
  return set.size();
}

inline int stabilizer_order(const std::vector<Rotation>& elements, const Vec3& v, double tol) {
  int k = 0;
  for (const auto& g : elements)
    if (angular_distance(g.apply(v), v) <= 10 * tol) ++k;
  return k;
}

inline std::string join_counts(const std::vector<std::pair<std::string, int>>& parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, count] : parts) {
    if (!first) os << ", ";
    os << name << " x" << count;
    first = false;
  }
  return os.str();
}

inline InvarianceVerdict match_dihedral(const std::vector<PointCluster>& cl, const Vec3& axis, int m, double tol) {
  int north = 0, south = 0, equatorial = 0;
  for (const auto& c : cl) {
    if (angular_distance(c.direction, axis) <= 10 * tol) {
      north += c.multiplicity;
    } else if (angular_distance(c.direction, -axis) <= 10 * tol) {
      south += c.multiplicity;
    } else if (std::abs(angular_distance(c.direction, axis) - pi / 2) <= 10 * tol && c.multiplicity == 1) {
      ++equatorial;
    } else {
      return {false, "MP off the poles and equator of the D" + std::to_string(m) + " axis, or a degenerate equatorial MP"};
    }
  }
  if (north != south) return {false, "unequal pole occupations"};
  if (equatorial != m) return {false, "equatorial ring does not have exactly m points"};
  return {true, "D" + std::to_string(m) + " pattern: " + std::to_string(north) + " MPs at each pole, " +
                    std::to_string(m) + " evenly spaced equatorial MPs"};
}

}  // namespace detail

/// Decide total invariance by matching the configuration against the catalog
/// of the detected group.
inline InvarianceVerdict is_totally_invariant(const MajoranaConfig& config, const SymmetryReport& report) {
  const double tol = report.tol;
  const auto cl = cluster_points(config, tol);
  using detail::stabilizer_order;
  switch (report.kind) {
    case GroupKind::trivial:
      return {false, "no nontrivial rotational symmetry"};
    case GroupKind::so3_full:
      return {false, "all MPs coincide: product state"};
    case GroupKind::cyclic:
      return {false, "C" + std::to_string(report.m) + " has no totally invariant states: rings can slide along the axis"};
    case GroupKind::so2:
    case GroupKind::o2: {
      int north = 0, south = 0;
      for (const auto& c : cl) {
        if (angular_distance(c.direction, report.axis) <= 10 * tol) north += c.multiplicity;
        else if (angular_distance(c.direction, -report.axis) <= 10 * tol) south += c.multiplicity;
        else return {false, "MP off the symmetry axis"};
      }
      return {true, "MPs only at the poles of the axis (" + std::to_string(north) + " and " + std::to_string(south) + ")"};
    }
    case GroupKind::dihedral: {
      std::vector<Vec3> candidates{report.axis};
      if (report.m == 2)
        for (const auto& a : detail::rotation_axes(report.elements, tol))
          if (!detail::same_axis(a.axis, report.axis, 10 * tol)) candidates.push_back(a.axis);
      InvarianceVerdict last{false, "no matching dihedral pattern"};
      for (const auto& ax : candidates) {
        auto v = detail::match_dihedral(cl, ax, report.m, tol);
        if (v.totally_invariant) return v;
        last = v;
      }
      return last;
    }
    case GroupKind::tetrahedral: {
      if (config.n() > tetrahedral_max_n) return {false, "n exceeds the tetrahedral bound 34"};
      int tetra_a = 0, tetra_b = 0, octa = 0;
      Vec3 first_tetra = Vec3::Zero();
      for (const auto& c : cl) {
        const int s = stabilizer_order(report.elements, c.direction, tol);
        if (s == 3 && c.multiplicity <= PolyhedralLimits::tetrahedron) {
          if (first_tetra.isZero()) first_tetra = c.direction;
          // the two tetrahedral orbits are antipodal to each other
          bool same_orbit = false;
          for (const auto& g : report.elements)
            same_orbit = same_orbit || angular_distance(g.apply(first_tetra), c.direction) <= 10 * tol;
          (same_orbit ? tetra_a : tetra_b) = c.multiplicity;
        } else if (s == 2 && c.multiplicity <= PolyhedralLimits::t_octahedron) {
          octa = c.multiplicity;
        } else {
          return {false, "MP of multiplicity " + std::to_string(c.multiplicity) + " with stabilizer of order " +
                             std::to_string(s) + " is not in the T catalog"};
        }
      }
      return {true, "T orbits: " + detail::join_counts({{"tetrahedron", tetra_a}, {"antipodal tetrahedron", tetra_b},
                                                        {"octahedron", octa}})};
    }
    case GroupKind::octahedral: {
      if (config.n() > octahedral_max_n) return {false, "n exceeds the octahedral bound 34"};
      int cube = 0, octa = 0;
      for (const auto& c : cl) {
        const int s = stabilizer_order(report.elements, c.direction, tol);
        if (s == 3 && c.multiplicity <= PolyhedralLimits::o_cube) cube = c.multiplicity;
        else if (s == 4 && c.multiplicity <= PolyhedralLimits::o_octahedron) octa = c.multiplicity;
        else
          return {false, "MP of multiplicity " + std::to_string(c.multiplicity) + " with stabilizer of order " +
                             std::to_string(s) + " is not in the O catalog"};
      }
      return {true, "O orbits: " + detail::join_counts({{"cube", cube}, {"octahedron", octa}})};
    }
    case GroupKind::icosahedral: {
      if (config.n() > icosahedral_max_n) return {false, "n exceeds the icosahedral bound 88"};
      int ico = 0, dode = 0;
      for (const auto& c : cl) {
        const int s = stabilizer_order(report.elements, c.direction, tol);
        if (s == 5 && c.multiplicity <= PolyhedralLimits::y_icosahedron) ico = c.multiplicity;
        else if (s == 3 && c.multiplicity <= PolyhedralLimits::y_dodecahedron) dode = c.multiplicity;
        else
          return {false, "MP of multiplicity " + std::to_string(c.multiplicity) + " with stabilizer of order " +
                             std::to_string(s) + " is not in the Y catalog"};
      }
      return {true, "Y orbits: " + detail::join_counts({{"icosahedron", ico}, {"dodecahedron", dode}})};
    }
  }
  return {false, "unknown group"};
}

/// Largest subgroup of SO(3) permuting the MP multiset (angular tolerance tol).
inline SymmetryReport detect_group(const MajoranaConfig& config, double tol = default_degeneracy_tol) {
  if (!(tol > 0)) throw std::invalid_argument("symmetry tolerance must be positive");
  SymmetryReport rep;
  rep.tol = tol;
  const auto cl = cluster_points(config, tol);
  const double axis_tol = 10 * tol;

  if (cl.size() == 1) {
    rep.kind = GroupKind::so3_full;
    rep.axis = cl[0].direction;
  } else if (std::all_of(cl.begin(), cl.end(),
                         [&](const PointCluster& c) { return detail::same_axis(c.direction, cl[0].direction, axis_tol); })) {
    // Two antipodal clusters: continuous rotations about their axis.
    const Vec3 axis = detail::canonical_axis(cl[0].direction);
    rep.axis = axis;
    rep.generators.push_back(Rotation::from_axis_angle(axis, pi / 2));
    if (cl[0].multiplicity == cl[1].multiplicity) {
      rep.kind = GroupKind::o2;
      rep.generators.push_back(Rotation::from_axis_angle(axis.unitOrthogonal(), pi));
    } else {
      rep.kind = GroupKind::so2;
    }
  } else {
    rep.elements = detail::finite_symmetries(cl, tol);
    const auto order = static_cast<int>(rep.elements.size());
    const auto axes = detail::rotation_axes(rep.elements, tol);
    int max_order = 1;
    Vec3 main_axis = Vec3::UnitZ();
    for (const auto& a : axes) {
      if (a.order > max_order) {
        max_order = a.order;
        main_axis = a.axis;
      }
    }
    rep.axis = main_axis;
    if (order == 1) {
      rep.kind = GroupKind::trivial;
    } else if (max_order == order) {
      rep.kind = GroupKind::cyclic;
      rep.m = order;
    } else if (2 * max_order == order) {
      rep.kind = GroupKind::dihedral;
      rep.m = max_order;
    } else if (order == 12 && max_order == 3) {
      rep.kind = GroupKind::tetrahedral;
    } else if (order == 24 && max_order == 4) {
      rep.kind = GroupKind::octahedral;
    } else if (order == 60 && max_order == 5) {
      rep.kind = GroupKind::icosahedral;
    } else {
      throw std::logic_error("rotation set of order " + std::to_string(order) + " is not a point group");
    }

    if (rep.kind == GroupKind::cyclic || rep.kind == GroupKind::dihedral) {
      rep.generators.push_back(Rotation::from_axis_angle(main_axis, 2 * pi / rep.m));
      if (rep.kind == GroupKind::dihedral) {
        for (const auto& g : rep.elements) {
          if (std::abs(g.angle() - pi) < axis_tol && !detail::same_axis(g.axis(), main_axis, axis_tol)) {
            rep.generators.push_back(g);
            break;
          }
        }
      }
    } else if (rep.kind != GroupKind::trivial) {
      // principal rotation plus the first element that generates the whole group with it
      const Rotation principal = Rotation::from_axis_angle(main_axis, 2 * pi / max_order);
      rep.generators.push_back(principal);
      for (const auto& g : rep.elements) {
        if (g.angle() < axis_tol || detail::same_axis(g.axis(), main_axis, axis_tol)) continue;
        if (detail::closure_size({principal, g}, rep.elements.size(), axis_tol) == rep.elements.size()) {
          rep.generators.push_back(g);
          break;
        }
      }
    }
  }
  const auto verdict = is_totally_invariant(config, rep);
  rep.totally_invariant = verdict.totally_invariant;
  rep.witness = verdict.witness;
  return rep;
}

}  // namespace majorana
