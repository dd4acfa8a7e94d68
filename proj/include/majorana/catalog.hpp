#pragma once

// Named state families: Dicke, GHZ, the dihedral two-term superpositions,
// the tetrahedral state and configurations built from polyhedral vertex orbits.
//
// Polyhedral orientation: all orbits of one family share the coordinate axes as
// symmetry axes, so orbits can be combined.
//   T: tetrahedron (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1); its antipode; octahedron (+-e_i)
//   O: cube (+-1,+-1,+-1); octahedron (+-e_i)
//   Y: icosahedron cyclic perms of (0,+-1,+-phi); dodecahedron (+-1,+-1,+-1) and
//      cyclic perms of (0,+-phi,+-1/phi), with phi the golden ratio
// gen_platonic then turns the single-solid configuration so that its first
// vertex sits on +z and the nearest other vertex lies in the half plane phi = 0.
// For the tetrahedron this lands exactly on the MPs of
// |T> = (|S(4,0)> + sqrt(2)|S(4,3)>)/sqrt(3).

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "majorana/symmetry.hpp"
#include "majorana/symstate.hpp"

namespace majorana {

struct CatalogEntry {
  std::string name;
  std::map<std::string, int> parameters;
  SymmetricState state;
};

inline SymmetricState gen_dicke(int n, int k) {
  if (n < 1) throw std::invalid_argument("dicke: n must be >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("dicke: k must satisfy 0 <= k <= n");
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[static_cast<std::size_t>(k)] = 1.0;
  return SymmetricState(n, std::move(a));
}

inline SymmetricState gen_ghz(int n) {
  if (n < 2) throw std::invalid_argument("ghz: n must be >= 2");
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  a.front() = a.back() = 1.0 / std::sqrt(2.0);
  return SymmetricState(n, std::move(a));
}

/// (|S(n,p)> + |S(n,n-p)>)/sqrt(2): p MPs per pole and m = n - 2p equatorial MPs.
inline SymmetricState gen_dihedral(int n, int p) {
  if (p < 0 || n - 2 * p < 2) throw std::invalid_argument("dihedral: need p >= 0 and m = n - 2p >= 2");
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[static_cast<std::size_t>(p)] = a[static_cast<std::size_t>(n - p)] = 1.0 / std::sqrt(2.0);
  return SymmetricState(n, std::move(a));
}

/// |T> = (|S(4,0)> + sqrt(2)|S(4,3)>)/sqrt(3).
inline SymmetricState gen_tetrahedral() {
  return SymmetricState(4, {1.0 / std::sqrt(3.0), 0.0, 0.0, std::sqrt(2.0 / 3.0), 0.0});
}

enum class Solid { tetrahedron, octahedron, cube, icosahedron, dodecahedron };
enum class Orbit { tetrahedron, antitetrahedron, octahedron, cube, icosahedron, dodecahedron };
enum class PolyhedralFamily { tetrahedral, octahedral, icosahedral };

inline std::string solid_name(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return "tetrahedron";
    case Solid::octahedron: return "octahedron";
    case Solid::cube: return "cube";
    case Solid::icosahedron: return "icosahedron";
    case Solid::dodecahedron: return "dodecahedron";
  }
  return "?";
}

inline Solid parse_solid(const std::string& name) {
  for (auto s : {Solid::tetrahedron, Solid::octahedron, Solid::cube, Solid::icosahedron, Solid::dodecahedron})
    if (solid_name(s) == name) return s;
  throw std::invalid_argument("unknown solid '" + name + "'");
}

inline std::vector<Vec3> orbit_vertices(Orbit o) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v;
  auto cyclic = [&v](double a, double b, double c) {
    v.emplace_back(a, b, c);
    v.emplace_back(c, a, b);
    v.emplace_back(b, c, a);
  };
  switch (o) {
    case Orbit::tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case Orbit::antitetrahedron:
      v = {{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
      break;
    case Orbit::octahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case Orbit::cube:
      for (int s = 0; s < 8; ++s) v.emplace_back(s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1);
      break;
    case Orbit::icosahedron:
      for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) cyclic(0.0, s1, s2 * phi);
      break;
    case Orbit::dodecahedron:
      for (int s = 0; s < 8; ++s) v.emplace_back(s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1);
      for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) cyclic(0.0, s1 * phi, s2 / phi);
      break;
  }
  for (auto& x : v) x.normalize();
  return v;
}

inline int orbit_limit(PolyhedralFamily f, Orbit o) {
  switch (f) {
    case PolyhedralFamily::tetrahedral:
      if (o == Orbit::tetrahedron || o == Orbit::antitetrahedron) return PolyhedralLimits::tetrahedron;
      if (o == Orbit::octahedron) return PolyhedralLimits::t_octahedron;
      break;
    case PolyhedralFamily::octahedral:
      if (o == Orbit::cube) return PolyhedralLimits::o_cube;
      if (o == Orbit::octahedron) return PolyhedralLimits::o_octahedron;
      break;
    case PolyhedralFamily::icosahedral:
      if (o == Orbit::icosahedron) return PolyhedralLimits::y_icosahedron;
      if (o == Orbit::dodecahedron) return PolyhedralLimits::y_dodecahedron;
      break;
  }
  return 0;
}

inline int family_max_n(PolyhedralFamily f) {
  switch (f) {
    case PolyhedralFamily::tetrahedral: return tetrahedral_max_n;
    case PolyhedralFamily::octahedral: return octahedral_max_n;
    case PolyhedralFamily::icosahedral: return icosahedral_max_n;
  }
  return 0;
}

/// MP configuration made of whole vertex orbits, each with a uniform
/// multiplicity, validated against the family's catalog limits.
inline MajoranaConfig polyhedral_config(PolyhedralFamily family, const std::vector<std::pair<Orbit, int>>& orbits) {
  std::vector<Vec3> pts;
  for (const auto& [orbit, mult] : orbits) {
    const int limit = orbit_limit(family, orbit);
    if (limit == 0) throw std::invalid_argument("orbit does not belong to this polyhedral family");
    if (mult < 0 || mult > limit)
      throw std::invalid_argument("orbit multiplicity " + std::to_string(mult) + " outside 0.." + std::to_string(limit));
    for (const auto& v : orbit_vertices(orbit))
      for (int i = 0; i < mult; ++i) pts.push_back(v);
  }
  if (pts.empty()) throw std::invalid_argument("empty polyhedral configuration");
  if (static_cast<int>(pts.size()) > family_max_n(family))
    throw std::invalid_argument("no totally invariant configuration with n = " + std::to_string(pts.size()) +
                                " exists for this group (bound " + std::to_string(family_max_n(family)) + ")");
  return MajoranaConfig::from_vectors(pts);
}

/// Rotation putting vertices[0] on +z and its nearest neighbour at azimuth 0.
inline Rotation standard_orientation(const std::vector<Vec3>& vertices) {
  const Vec3& v0 = vertices.front();
  const Vec3* nearest = nullptr;
  for (const auto& v : vertices)
    if (angular_distance(v, v0) > 1e-9 && (!nearest || angular_distance(v, v0) < angular_distance(*nearest, v0) - 1e-9))
      nearest = &v;
  const Rotation up = Rotation::aligning(v0, Vec3::UnitZ());
  if (!nearest) return up;
  const Vec3 w = up.apply(*nearest);
  return Rotation::from_axis_angle(Vec3::UnitZ(), -std::atan2(w.y(), w.x())) * up;
}

inline SymmetricState gen_platonic(Solid solid, int multiplicity) {
  PolyhedralFamily fam;
  Orbit orbit;
  switch (solid) {
    case Solid::tetrahedron: fam = PolyhedralFamily::tetrahedral; orbit = Orbit::tetrahedron; break;
    case Solid::octahedron: fam = PolyhedralFamily::octahedral; orbit = Orbit::octahedron; break;
    case Solid::cube: fam = PolyhedralFamily::octahedral; orbit = Orbit::cube; break;
    case Solid::icosahedron: fam = PolyhedralFamily::icosahedral; orbit = Orbit::icosahedron; break;
    case Solid::dodecahedron: fam = PolyhedralFamily::icosahedral; orbit = Orbit::dodecahedron; break;
    default: throw std::invalid_argument("unknown solid");
  }
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");
  const auto config = polyhedral_config(fam, {{orbit, multiplicity}});
  if (config.n() > max_qubits) throw std::invalid_argument("platonic state exceeds 64 qubits");
  return to_dicke(rotate(config, standard_orientation(orbit_vertices(orbit))));
}

/// Every catalog state with 2 <= n <= max_n whose configuration is detected as
/// totally invariant: Dicke states, dihedral states, |T> and the polyhedral
/// orbit combinations.
inline std::vector<CatalogEntry> totally_invariant_states(int max_n) {
  std::vector<CatalogEntry> out;
  auto keep = [&](CatalogEntry e) {
    if (detect_group(to_majorana(e.state)).totally_invariant) out.push_back(std::move(e));
  };
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= n / 2; ++k)
      keep({"dicke", {{"n", n}, {"k", k}}, gen_dicke(n, k)});
    for (int p = 0; n - 2 * p >= 2; ++p)
      keep({"dihedral", {{"n", n}, {"p", p}, {"m", n - 2 * p}}, gen_dihedral(n, p)});
    if (n == 4) keep({"tetrahedral", {}, gen_tetrahedral()});
  }
  auto add_poly = [&](PolyhedralFamily fam, const std::string& name,
                      const std::vector<std::pair<Orbit, int>>& orbits) {
    int n = 0;
    std::map<std::string, int> params;
    for (const auto& [o, m] : orbits) n += m * static_cast<int>(orbit_vertices(o).size());
    if (n < 2 || n > max_n || n > max_qubits) return;
    const char* names[] = {"tetrahedron", "antitetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"};
    for (const auto& [o, m] : orbits) params[names[static_cast<int>(o)]] = m;
    keep({name, params, to_dicke(polyhedral_config(fam, orbits))});
  };
  // a > b: swapping the two tetrahedral orbits is a rotation; equal occupations have
  // the full octahedral symmetry; (1,0,0) is |T> again.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b < a; ++b)
      for (int c = 0; c <= 3; ++c)
        if (!(a == 1 && b == 0 && c == 0)) add_poly(PolyhedralFamily::tetrahedral, "T-orbits",
                             {{Orbit::tetrahedron, a}, {Orbit::antitetrahedron, b}, {Orbit::octahedron, c}});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      add_poly(PolyhedralFamily::octahedral, "O-orbits", {{Orbit::cube, a}, {Orbit::octahedron, b}});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      add_poly(PolyhedralFamily::icosahedral, "Y-orbits", {{Orbit::icosahedron, a}, {Orbit::dodecahedron, b}});
  return out;
}

}  // namespace majorana
