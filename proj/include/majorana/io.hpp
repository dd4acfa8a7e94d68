#pragma once

// JSON form of states and results. Requires nlohmann/json (json.hpp).
//
// State documents:
//   {"n": 4, "dicke": [{"re": .., "im": ..}, ...]}                      n+1 entries
//   {"n": 4, "majorana": [{"theta": .., "phi": ..}, ...], "phase": ..}  n entries
// Exactly one of "dicke" / "majorana"; "phase" is optional.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "majorana/entanglement.hpp"
#include "majorana/slocc.hpp"
#include "majorana/symmetry.hpp"
#include "majorana/symstate.hpp"
#include "majorana/twirl.hpp"

namespace majorana {

using json = nlohmann::json;

/// A document that parses as JSON but does not match the schema. `path` is a
/// JSON-pointer-like location such as "/dicke/2/im".
class schema_error : public std::runtime_error {
 public:
  schema_error(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw schema_error(path.empty() ? "/" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw schema_error(path + "/" + key, "missing field");
  return *it;
}

inline double number_at(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number()) throw schema_error(path + "/" + key, "expected a number");
  return v.get<double>();
}

}  // namespace detail

/// Parsed state document; `config` is set when the input was given as MPs.
struct StateDocument {
  SymmetricState state;
  std::optional<MajoranaConfig> config;
};

inline StateDocument state_from_json(const json& doc) {
  using detail::number_at;
  using detail::require;
  if (!doc.is_object()) throw schema_error("/", "expected an object");
  const auto& nj = require(doc, "n", "");
  if (!nj.is_number_integer()) throw schema_error("/n", "expected an integer");
  const long long n = nj.get<long long>();
  if (n < 1) throw schema_error("/n", "must be >= 1");
  if (n > max_qubits) throw schema_error("/n", "must be <= 64");

  const bool has_dicke = doc.contains("dicke"), has_mp = doc.contains("majorana");
  if (has_dicke == has_mp) throw schema_error("/", "exactly one of \"dicke\" and \"majorana\" is required");

  if (has_dicke) {
    const auto& arr = doc.at("dicke");
    if (!arr.is_array()) throw schema_error("/dicke", "expected an array");
    if (static_cast<long long>(arr.size()) != n + 1)
      throw schema_error("/dicke", "expected " + std::to_string(n + 1) + " entries, got " + std::to_string(arr.size()));
    std::vector<cplx> a;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string p = "/dicke/" + std::to_string(k);
      a.emplace_back(number_at(arr[k], "re", p), number_at(arr[k], "im", p));
    }
    try {
      return {SymmetricState(static_cast<int>(n), std::move(a)), std::nullopt};
    } catch (const std::invalid_argument& e) {
      throw schema_error("/dicke", e.what());
    }
  }

  const auto& arr = doc.at("majorana");
  if (!arr.is_array()) throw schema_error("/majorana", "expected an array");
  if (static_cast<long long>(arr.size()) != n)
    throw schema_error("/majorana", "expected " + std::to_string(n) + " entries, got " + std::to_string(arr.size()));
  std::vector<SpherePoint> pts;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string p = "/majorana/" + std::to_string(k);
    pts.push_back({number_at(arr[k], "theta", p), number_at(arr[k], "phi", p)});
  }
  double phase = 0.0;
  if (doc.contains("phase")) phase = number_at(doc, "phase", "");
  try {
    MajoranaConfig config(std::move(pts), phase);
    return {to_dicke(config), config};
  } catch (const std::invalid_argument& e) {
    throw schema_error("/majorana", e.what());
  }
}

inline json to_json(const SymmetricState& s) {
  json arr = json::array();
  for (int k = 0; k <= s.n(); ++k) arr.push_back({{"re", s[k].real()}, {"im", s[k].imag()}});
  return {{"n", s.n()}, {"dicke", arr}};
}

inline json to_json(const MajoranaConfig& c) {
  json arr = json::array();
  for (const auto& p : c.points()) arr.push_back({{"theta", p.theta}, {"phi", p.phi}});
  return {{"n", c.n()}, {"majorana", arr}, {"phase", c.global_phase()}};
}

inline json to_json(const EntanglementResult& r) {
  return {{"lambda", r.lambda},
          {"eg_bits", r.eg},
          {"theta", r.argmax_direction.theta},
          {"phi", r.argmax_direction.phi},
          {"converged", r.converged},
          {"starts_used", r.starts_used},
          {"gradient_norm", r.max_gradient_norm}};
}

inline json vec_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

inline json to_json(const SymmetryReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back({{"axis", vec_json(g.axis())}, {"angle", g.angle()}});
  json out = {{"group", r.label()},
              {"order", r.finite() ? json(r.elements.size()) : json(nullptr)},
              {"axis", vec_json(r.axis)},
              {"generators", gens},
              {"totally_invariant", r.totally_invariant},
              {"witness", r.witness},
              {"tolerance", r.tol}};
  return out;
}

inline json to_json(const TwirlCertificate& c) {
  return {{"lambda_claimed", c.lambda_claimed},
          {"overlap", c.overlap},
          {"delta_min_eig", c.delta_min_eig},
          {"delta_psi_component", c.delta_psi_component},
          {"delta_trace", c.delta_trace},
          {"valid", c.valid},
          {"diagnostics", c.diagnostics}};
}

inline json to_json(const DegeneracySignature& s) {
  return {{"multiplicities", s.multiplicities}, {"ambiguous", s.ambiguous}};
}

inline json to_json(const SloccProfile& p) {
  json out = {{"n", p.n},
              {"signature", to_json(p.signature)},
              {"group", p.group},
              {"lambda", p.lambda},
              {"eg_bits", p.eg},
              {"r_lower", p.bound.r_lower},
              {"r_source", p.bound.source == RankSource::known_value ? "known_value" : "geometric_measure_bound"}};
  return out;
}

inline json to_json(const SloccResult& r) { return {{"verdict", verdict_name(r.verdict)}, {"reason", r.reason}}; }

inline json to_json(const SloccTable& t) {
  json rows = json::array(), pairs = json::array();
  for (const auto& r : t.rows) {
    json row = to_json(r.profile);
    row["name"] = r.name;
    rows.push_back(row);
  }
  int undetermined = 0;
  for (const auto& p : t.pairs) {
    json pj = to_json(p.result);
    pj["first"] = p.first;
    pj["second"] = p.second;
    pairs.push_back(pj);
    undetermined += p.result.verdict == SloccVerdict::undetermined;
  }
  return {{"rows", rows}, {"pairs", pairs}, {"undetermined", undetermined}};
}

}  // namespace majorana
