// majorana: command-line front end.
//
// Exit codes: 0 success, 1 domain or schema error (including bad arguments),
// 2 I/O error (unreadable input, unwritable output, input that is not JSON).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "majorana/io.hpp"
#include "majorana/majorana.hpp"

namespace {

using namespace majorana;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output = "-";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

double tolerance(const Options& o) {
  if (o.tol) return *o.tol;
  if (const char* env = std::getenv("MAJORANA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw std::invalid_argument("MAJORANA_TOL must be a positive number");
    return v;
  }
  return default_degeneracy_tol;
}

OptimizerConfig optimizer(const Options& o, int n) {
  auto cfg = OptimizerConfig::for_qubits(n);
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

StateDocument read_state(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_all(path));
  } catch (const json::parse_error& e) {
    throw io_error(std::string("input is not valid JSON: ") + e.what());
  }
  return state_from_json(doc);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw io_error("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << text;
  if (!out) throw io_error("cannot write " + path);
}

void emit(const Options& o, const json& j) { write_text(o.output, j.dump(2) + "\n"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorana representation of symmetric multiqubit states"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options opt;
  app.add_option("-o,--output", opt.output, "output path ('-' for stdout)");
  app.add_option("--seed", opt.seed, "seed for the optimizer's random starts");
  app.add_option("--tol", opt.tol, "MP coincidence tolerance in radians (default $MAJORANA_TOL or 1e-6)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named state");
  gen->require_subcommand(1);
  std::string gen_form = "dicke";
  gen->add_option("--as", gen_form, "output form")->check(CLI::IsMember({"dicke", "majorana"}));
  int n = 0, k = 0, p = 0, mult = 1;
  std::string solid;
  auto* g_dicke = gen->add_subcommand("dicke", "|S(n,k)>");
  g_dicke->add_option("--n", n)->required();
  g_dicke->add_option("--k", k)->required();
  auto* g_ghz = gen->add_subcommand("ghz", "(|0..0> + |1..1>)/sqrt(2)");
  g_ghz->add_option("--n", n)->required();
  auto* g_dihedral = gen->add_subcommand("dihedral", "(|S(n,p)> + |S(n,n-p)>)/sqrt(2)");
  g_dihedral->add_option("--n", n)->required();
  g_dihedral->add_option("--p", p)->required();
  auto* g_tetra = gen->add_subcommand("tetrahedral", "(|S(4,0)> + sqrt(2)|S(4,3)>)/sqrt(3)");
  auto* g_platonic = gen->add_subcommand("platonic", "MPs on the vertices of a Platonic solid");
  g_platonic->add_option("--solid", solid)->required()->check(
      CLI::IsMember({"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}));
  g_platonic->add_option("--mult", mult, "MPs per vertex");

  std::string input = "-";
  auto add_input = [&input](CLI::App* c) { c->add_option("input", input, "state JSON path ('-' for stdin)"); };

  auto* convert = app.add_subcommand("convert", "convert between Dicke and Majorana forms");
  std::string to;
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"dicke", "majorana"}));
  add_input(convert);

  auto* entangle = app.add_subcommand("entangle", "geometric measure of entanglement");
  int grid = 0;
  entangle->add_option("--grid", grid, "also report the grid-search value at this resolution");
  add_input(entangle);

  auto* symmetry = app.add_subcommand("symmetry", "point group of the MPs and total invariance");
  add_input(symmetry);

  auto* slocc = app.add_subcommand("slocc", "SLOCC inequivalence evidence for two states");
  std::string input_a, input_b;
  slocc->add_option("a", input_a)->required();
  slocc->add_option("b", input_b)->required();

  auto* table4 = app.add_subcommand("table4", "four-qubit states with a symmetry group, pairwise");
  int invariant_max_n = 0;
  table4->add_option("--invariant-max-n", invariant_max_n,
                     "instead tabulate all catalog totally invariant states with n up to this value");

  auto* twirl = app.add_subcommand("twirl", "group-averaging certificate E_G = E_R = E_Rob");
  add_input(twirl);

  auto* plot = app.add_subcommand("plot", "sphere plot data (CSV, optional SVG)");
  bool with_max = false;
  std::string svg_path;
  plot->add_flag("--with-maximizer", with_max, "add the closest product state");
  plot->add_option("--svg", svg_path, "also write an SVG rendering");
  add_input(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const double tol = tolerance(opt);
    if (gen->parsed()) {
      SymmetricState s = g_dicke->parsed()      ? gen_dicke(n, k)
                         : g_ghz->parsed()      ? gen_ghz(n)
                         : g_dihedral->parsed() ? gen_dihedral(n, p)
                         : g_tetra->parsed()    ? gen_tetrahedral()
                                                : gen_platonic(parse_solid(solid), mult);
      emit(opt, gen_form == "dicke" ? to_json(s) : to_json(to_majorana(s)));
    } else if (convert->parsed()) {
      const auto doc = read_state(input);
      emit(opt, to == "dicke" ? to_json(doc.state) : to_json(doc.config ? *doc.config : to_majorana(doc.state)));
    } else if (entangle->parsed()) {
      const auto s = read_state(input).state;
      json j = to_json(geometric_measure(s, optimizer(opt, s.n())));
      if (grid > 0) {
        const auto g = grid_oracle(s, grid);
        j["grid_lambda"] = g.lambda;
        j["grid_eg_bits"] = g.eg;
      }
      emit(opt, j);
    } else if (symmetry->parsed()) {
      const auto s = read_state(input).state;
      emit(opt, to_json(detect_group(to_majorana(s), tol)));
    } else if (slocc->parsed()) {
      const auto a = read_state(input_a).state, b = read_state(input_b).state;
      if (a.n() != b.n()) throw std::invalid_argument("SLOCC comparison needs equal qubit counts");
      const auto pa = slocc_profile(a, tol), pb = slocc_profile(b, tol);
      json j = to_json(slocc_distinguish(pa, pb));
      j["first"] = to_json(pa);
      j["second"] = to_json(pb);
      emit(opt, j);
    } else if (table4->parsed()) {
      emit(opt, to_json(invariant_max_n > 0 ? totally_invariant_table(invariant_max_n) : four_qubit_table()));
    } else if (twirl->parsed()) {
      const auto s = read_state(input).state;
      const auto sym = detect_group(to_majorana(s), tol);
      const auto ent = geometric_measure(s, optimizer(opt, s.n()));
      json j = to_json(certify_equivalence(s, ent, sym));
      j["group"] = sym.label();
      j["eg_bits"] = ent.eg;
      emit(opt, j);
    } else if (plot->parsed()) {
      const auto doc = read_state(input);
      const auto config = doc.config ? *doc.config : to_majorana(doc.state);
      std::optional<SpherePoint> maximizer;
      if (with_max) maximizer = geometric_measure(doc.state, optimizer(opt, doc.state.n())).argmax_direction;
      const auto rows = plot_rows(config, maximizer, tol);
      std::ostringstream csv;
      write_csv(csv, rows);
      write_text(opt.output, csv.str());
      if (!svg_path.empty()) {
        std::ostringstream svg;
        write_svg(svg, rows);
        write_text(svg_path, svg.str());
      }
    }
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const schema_error& e) {
    std::cerr << "schema error at " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
