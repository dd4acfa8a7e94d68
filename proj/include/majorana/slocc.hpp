#pragma once

// Evidence for SLOCC inequivalence of symmetric states.
//
// Two invariants are used. The degeneracy signature (how many MPs coincide at
// each point) cannot change under SLOCC. The product-state rank r (fewest
// product terms in any expansion) cannot change either, and E_G <= log2 r gives
// r >= ceil(1/Lambda). If one state has a known r below the other's lower
// bound, they are inequivalent. Nothing here ever concludes equivalence.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "majorana/catalog.hpp"
#include "majorana/entanglement.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/symstate.hpp"

namespace majorana {

struct DegeneracySignature {
  std::vector<int> multiplicities;  // descending, sums to n
  bool ambiguous = false;           // two clusters closer than 2*tol

  bool operator==(const DegeneracySignature& o) const { return multiplicities == o.multiplicities; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < multiplicities.size(); ++i) os << (i ? "," : "") << multiplicities[i];
    os << ')';
    return os.str();
  }
};

inline DegeneracySignature degeneracy_signature(const MajoranaConfig& config, double tol = default_degeneracy_tol) {
  DegeneracySignature sig;
  const auto clusters = cluster_points(config, tol);
  const auto v = config.vectors();
  for (const auto& c : clusters) sig.multiplicities.push_back(c.multiplicity);
  std::sort(sig.multiplicities.rbegin(), sig.multiplicities.rend());
  for (std::size_t i = 0; i < clusters.size() && !sig.ambiguous; ++i)
    for (std::size_t j = i + 1; j < clusters.size() && !sig.ambiguous; ++j)
      for (const auto& a : clusters[i].members)
        for (const auto& b : clusters[j].members)
          if (angular_distance(v[a], v[b]) <= 2 * tol) sig.ambiguous = true;
  return sig;
}

enum class RankSource { geometric_measure_bound, known_value };

struct SchmidtBound {
  int r_lower = 1;
  RankSource source = RankSource::geometric_measure_bound;
};

/// ceil(2^{E_G}) = ceil(1/Lambda), with slack so that Lambda = 1/3 computed as
/// 0.33333333333 still gives 3.
inline int rank_lower_bound(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("Lambda must lie in (0, 1]");
  return std::max(1, static_cast<int>(std::ceil(1.0 / lambda - 1e-6)));
}

/// Known product-state ranks: 1 for product states, 2 for GHZ-type states
/// (MPs evenly spaced on a great circle, which is GHZ_n up to rotation).
inline std::optional<int> known_rank(const MajoranaConfig& config, const SymmetryReport& sym) {
  if (sym.kind == GroupKind::so3_full) return 1;
  if (sym.kind == GroupKind::dihedral && sym.m == config.n()) return 2;
  if (config.n() == 2 && sym.kind == GroupKind::o2) return 2;  // two antipodal MPs
  return std::nullopt;
}

/// Everything the verdict needs about one state.
struct SloccProfile {
  int n = 0;
  DegeneracySignature signature;
  std::string group;
  double lambda = 1.0;
  double eg = 0.0;
  std::optional<int> r_known;
  SchmidtBound bound;
};

inline SloccProfile slocc_profile(const SymmetricState& s, double tol = default_degeneracy_tol) {
  SloccProfile p;
  p.n = s.n();
  const auto config = to_majorana(s);
  p.signature = degeneracy_signature(config, tol);
  const auto sym = detect_group(config, tol);
  p.group = sym.label();
  const auto ent = geometric_measure(s);
  p.lambda = ent.lambda;
  p.eg = ent.eg;
  p.r_known = known_rank(config, sym);
  if (p.r_known) p.bound = {*p.r_known, RankSource::known_value};
  else p.bound = {rank_lower_bound(p.lambda), RankSource::geometric_measure_bound};
  return p;
}

enum class SloccVerdict { inequivalent, undetermined };

struct SloccResult {
  SloccVerdict verdict = SloccVerdict::undetermined;
  std::string reason;
};

inline std::string verdict_name(SloccVerdict v) {
  return v == SloccVerdict::inequivalent ? "Inequivalent" : "Undetermined";
}

inline SloccResult slocc_distinguish(const SloccProfile& a, const SloccProfile& b) {
  if (a.n != b.n) throw std::invalid_argument("SLOCC comparison needs equal qubit counts");
  if (!(a.signature == b.signature))
    return {SloccVerdict::inequivalent,
            "degeneracy signatures differ: " + a.signature.str() + " vs " + b.signature.str()};
  // r bounds: a known rank strictly below the other state's lower bound separates them
  const int ra = rank_lower_bound(a.lambda), rb = rank_lower_bound(b.lambda);
  if (a.r_known && *a.r_known < rb)
    return {SloccVerdict::inequivalent, "rank bound: r(first) = " + std::to_string(*a.r_known) +
                                            " < " + std::to_string(rb) + " <= r(second)"};
  if (b.r_known && *b.r_known < ra)
    return {SloccVerdict::inequivalent, "rank bound: r(second) = " + std::to_string(*b.r_known) +
                                            " < " + std::to_string(ra) + " <= r(first)"};
  return {SloccVerdict::undetermined, "same signature " + a.signature.str() + " and no separating rank bound"};
}

inline SloccResult slocc_distinguish(const SymmetricState& a, const SymmetricState& b,
                                     double tol = default_degeneracy_tol) {
  if (a.n() != b.n()) throw std::invalid_argument("SLOCC comparison needs equal qubit counts");
  return slocc_distinguish(slocc_profile(a, tol), slocc_profile(b, tol));
}

struct TableRow {
  std::string name;
  SymmetricState state;
  SloccProfile profile;
};

struct PairVerdict {
  std::string first, second;
  SloccResult result;
};

struct SloccTable {
  std::vector<TableRow> rows;
  std::vector<PairVerdict> pairs;
};

inline SloccTable pairwise_table(std::vector<std::pair<std::string, SymmetricState>> states) {
  SloccTable t;
  for (auto& [name, s] : states) t.rows.push_back({name, s, slocc_profile(s)});
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i + 1; j < t.rows.size(); ++j)
      if (t.rows[i].profile.n == t.rows[j].profile.n)
        t.pairs.push_back({t.rows[i].name, t.rows[j].name, slocc_distinguish(t.rows[i].profile, t.rows[j].profile)});
  return t;
}

/// The four entangled four-qubit states with a symmetry group.
inline SloccTable four_qubit_table() {
  return pairwise_table({{"T", gen_tetrahedral()},
                         {"GHZ4", gen_ghz(4)},
                         {"S(4,2)", gen_dicke(4, 2)},
                         {"W4", gen_dicke(4, 1)}});
}

inline std::string entry_label(const CatalogEntry& e) {
  std::string s = e.name;
  if (!e.parameters.empty()) {
    s += '(';
    bool first = true;
    for (const auto& [k, v] : e.parameters) {
      s += (first ? "" : ",") + k + "=" + std::to_string(v);
      first = false;
    }
    s += ')';
  }
  return s;
}

/// Pairwise verdicts among all catalog totally invariant states of equal n <= max_n.
inline SloccTable totally_invariant_table(int max_n) {
  std::vector<std::pair<std::string, SymmetricState>> states;
  for (const auto& e : totally_invariant_states(max_n)) states.emplace_back(entry_label(e), e.state);
  return pairwise_table(std::move(states));
}

}  // namespace majorana
