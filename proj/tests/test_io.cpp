#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "majorana/catalog.hpp"
#include "majorana/io.hpp"
#include "majorana/plot.hpp"

namespace majorana {
namespace {

std::string schema_path(const std::string& text) {
  try {
    state_from_json(json::parse(text));
  } catch (const schema_error& e) {
    return e.path();
  }
  return "<accepted>";
}

TEST(StateJson, ParsesDickeAndMajoranaForms) {
  auto d = state_from_json(json::parse(R"({"n":1,"dicke":[{"re":1,"im":0},{"re":0,"im":0}]})"));
  EXPECT_EQ(d.state.n(), 1);
  EXPECT_FALSE(d.config.has_value());
  EXPECT_NEAR(to_majorana(d.state).points()[0].theta, 0.0, 1e-15);

  auto m = state_from_json(json::parse(R"({"n":2,"majorana":[{"theta":1.5707963267948966,"phi":0},
                                                             {"theta":1.5707963267948966,"phi":3.141592653589793}]})"));
  ASSERT_TRUE(m.config.has_value());
  EXPECT_NEAR(fidelity(m.state, to_dicke(*m.config)), 1.0, 1e-15);
}

TEST(StateJson, SchemaErrorsCarryFieldPath) {
  EXPECT_EQ(schema_path(R"([1,2])"), "/");
  EXPECT_EQ(schema_path(R"({"dicke":[]})"), "/n");
  EXPECT_EQ(schema_path(R"({"n":1.5,"dicke":[]})"), "/n");
  EXPECT_EQ(schema_path(R"({"n":0,"dicke":[]})"), "/n");
  EXPECT_EQ(schema_path(R"({"n":65,"dicke":[]})"), "/n");
  EXPECT_EQ(schema_path(R"({"n":1})"), "/");
  EXPECT_EQ(schema_path(R"({"n":1,"dicke":[],"majorana":[]})"), "/");
  EXPECT_EQ(schema_path(R"({"n":1,"dicke":[{"re":1,"im":0}]})"), "/dicke");
  EXPECT_EQ(schema_path(R"({"n":1,"dicke":[{"re":1,"im":0},{"re":0}]})"), "/dicke/1/im");
  EXPECT_EQ(schema_path(R"({"n":1,"dicke":[{"re":1,"im":0},{"re":"x","im":0}]})"), "/dicke/1/re");
  EXPECT_EQ(schema_path(R"({"n":1,"dicke":[{"re":0,"im":0},{"re":0,"im":0}]})"), "/dicke");
  EXPECT_EQ(schema_path(R"({"n":2,"majorana":[{"theta":0,"phi":0},{"phi":0}]})"), "/majorana/1/theta");
  EXPECT_EQ(schema_path(R"({"n":1,"majorana":[{"theta":0,"phi":0}],"phase":"x"})"), "/phase");
}

TEST(StateJson, RoundTripIsExact) {
  const auto s = gen_tetrahedral();
  const auto back = state_from_json(json::parse(to_json(s).dump())).state;
  for (int k = 0; k <= s.n(); ++k) EXPECT_EQ(back[k], s[k]);

  const auto c = to_majorana(gen_dihedral(7, 2));
  const auto doc = state_from_json(json::parse(to_json(c).dump()));
  ASSERT_TRUE(doc.config.has_value());
  EXPECT_EQ(*doc.config, c);
}

TEST(ResultJson, FieldsPresent) {
  const auto s = gen_dicke(4, 2);
  const auto sym = detect_group(to_majorana(s));
  const auto js = to_json(sym);
  EXPECT_EQ(js["group"], "O(2)");
  EXPECT_TRUE(js["totally_invariant"].get<bool>());
  EXPECT_EQ(js["generators"].size(), 2u);

  const auto ent = geometric_measure(s);
  const auto je = to_json(ent);
  EXPECT_NEAR(je["eg_bits"].get<double>(), std::log2(8.0 / 3.0), 1e-9);
  for (const char* k : {"lambda", "theta", "phi", "converged"}) EXPECT_TRUE(je.contains(k)) << k;

  const auto jc = to_json(certify_equivalence(s, ent, sym));
  for (const char* k : {"lambda_claimed", "overlap", "delta_min_eig", "delta_psi_component", "valid"})
    EXPECT_TRUE(jc.contains(k)) << k;

  const auto jt = to_json(four_qubit_table());
  EXPECT_EQ(jt["rows"].size(), 4u);
  EXPECT_EQ(jt["pairs"].size(), 6u);
  EXPECT_EQ(jt["undetermined"], 0);
}

TEST(Plot, GhzSixWithMaximizer) {
  const auto c = to_majorana(gen_ghz(6));
  const auto rows = plot_rows(c, SpherePoint{0.0, 0.0});
  ASSERT_EQ(rows.size(), 7u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(rows[i].point.theta, pi / 2, 1e-12);
    EXPECT_EQ(rows[i].role, "mp");
    EXPECT_EQ(rows[i].multiplicity, 1);
  }
  for (int i = 1; i < 6; ++i) EXPECT_NEAR(rows[i].point.phi - rows[i - 1].point.phi, pi / 3, 1e-10);
  EXPECT_EQ(rows[6].role, "maximizer");
}

TEST(Plot, ClustersAndNoMaximizer) {
  const auto rows = plot_rows(to_majorana(gen_dicke(4, 2)), std::nullopt);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].multiplicity, 2);
  EXPECT_EQ(rows[1].multiplicity, 2);
}

TEST(Plot, CsvFormatAndDeterminism) {
  const auto rows = plot_rows(to_majorana(gen_tetrahedral()), SpherePoint{2.0, 1.0});
  std::ostringstream a, b;
  write_csv(a, rows);
  write_csv(b, rows);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,phi,x,y,z,multiplicity,role");
  int count = 0;
  while (std::getline(in, line)) {
    ++count;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
  }
  EXPECT_EQ(count, 5);

  std::ostringstream svg;
  write_svg(svg, rows);
  EXPECT_EQ(svg.str().rfind("<svg", 0), 0u);
  EXPECT_NE(svg.str().find("fill=\"white\""), std::string::npos);
}

}  // namespace
}  // namespace majorana
