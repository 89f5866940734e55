// srg: enumeration, boundaries, homology tables and verification suites.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.

#include "srg/complex.hpp"
#include "srg/verify.hpp"
#include "srg/wick.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace srg;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Execution execution() { return thread_count() > 1 ? Execution::parallel : Execution::serial; }

std::optional<GenusMarked> filter_of(int genus, int marked) {
  if ((genus < 0) != (marked < 0)) throw UsageError("--genus and --marked must be given together");
  if (genus < 0) return std::nullopt;
  if (2 * genus - 2 + marked <= 0 || marked < 1) throw UsageError("(g,n) must satisfy n >= 1 and 2g-2+n > 0");
  return GenusMarked{genus, marked};
}

void check_edges(int e, const char* flag) {
  if (e < 1 || e > kDefaultMaxEdges)
    throw UsageError(std::string(flag) + " must lie in 1.." + std::to_string(kDefaultMaxEdges));
}

std::string type_str(GenusMarked t) { return "(" + std::to_string(t.genus) + "," + std::to_string(t.marked) + ")"; }

// ---- enumerate ------------------------------------------------------------

struct EnumArgs {
  int edges = 0;
  int genus = -1, marked = -1;
  std::string complex = "srgc";
  bool connected = false;
  bool include_zero = false;
};

int run_enumerate(const EnumArgs& a, bool json) {
  check_edges(a.edges, "--edges");
  EnumerationOptions o;
  o.edges = a.edges;
  o.filter = filter_of(a.genus, a.marked);
  o.complex = parse_complex(a.complex);
  o.connected = a.connected;
  o.include_zero = a.include_zero;
  o.execution = execution();
  const auto codes = enumerate(o);
  if (json) {
    ordered_json j;
    j["complex"] = a.complex;
    j["edges"] = a.edges;
    j["filter"] = o.filter ? ordered_json::array({o.filter->genus, o.filter->marked}) : ordered_json();
    j["connected"] = a.connected;
    j["count"] = codes.size();
    auto& gs = j["graphs"] = ordered_json::array();
    for (const auto& c : codes) {
      auto g = decode(c);
      ordered_json types = ordered_json::array();
      for (auto t : component_types(g)) types.push_back({t.genus, t.marked});
      gs.push_back({{"hash", code_hash(c)}, {"types", types}, {"record", to_record(g)}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "# complex=" << a.complex << " edges=" << a.edges
            << " filter=" << (o.filter ? type_str(*o.filter) : std::string("none"))
            << " connected=" << (a.connected ? "yes" : "no") << "\n";
  for (const auto& c : codes) std::cout << code_hash(c) << "  " << to_record(decode(c)) << "\n";
  std::cout << "count " << codes.size() << "\n";
  return 0;
}

// ---- boundary -------------------------------------------------------------

// Lines: "<record>" or "<p/q> <record>"; blank lines and '#' comments skipped.
GraphChain read_chain(std::istream& in) {
  GraphChain c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    Rational coeff = 1;
    if (line.rfind("E=", 0) != 0) {
      auto sp = line.find(' ');
      if (sp == std::string::npos) throw UsageError("line " + std::to_string(lineno) + ": expected a graph record");
      coeff = parse_rational(line.substr(0, sp));
      line = line.substr(line.find_first_not_of(' ', sp));
    }
    StableRibbonGraph g;
    try {
      g = parse_record(line);
      require_valid(g);
    } catch (const std::invalid_argument& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
    add_graph(c, g, coeff);
  }
  return c;
}

void print_chain(const GraphChain& c, bool json) {
  if (json) {
    ordered_json j = ordered_json::array();
    for (const auto& [code, q] : c) j.push_back({{"coeff", pq(q)}, {"hash", code_hash(code)}, {"record", to_record(decode(code))}});
    std::cout << ordered_json{{"terms", j}}.dump(2) << "\n";
    return;
  }
  if (c.is_zero()) std::cout << "0\n";
  for (const auto& [code, q] : c) std::cout << to_string(q) << " " << to_record(decode(code)) << "\n";
}

int run_boundary(const std::string& path, const std::string& complex, bool json) {
  GraphChain c;
  if (path == "-") {
    c = read_chain(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    c = read_chain(in);
  }
  print_chain(differential(c, parse_complex(complex), execution()), json);
  return 0;
}

// ---- homology -------------------------------------------------------------

struct HomologyArgs {
  std::string complex = "srgc";
  int genus = -1, marked = -1;
  int max_edges = 0;
  bool all_components = false;
  bool check_dense = false;
  std::string emit_dir;
};

void emit_matrices(const ComplexSlice& s, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t k = 2; k < s.boundary.size(); ++k) {
    std::ofstream out(std::filesystem::path(dir) / ("d" + std::to_string(k) + ".txt"));
    if (!out) throw UsageError("cannot write into " + dir);
    out << "# boundary C_" << k << " -> C_" << k - 1 << "; rows index degree " << k - 1 << ", cols degree " << k << "\n";
    s.boundary[k].write_triplets(out);
  }
  for (std::size_t k = 1; k < s.basis.size(); ++k) {
    std::ofstream out(std::filesystem::path(dir) / ("basis" + std::to_string(k) + ".txt"));
    for (const auto& c : s.basis[k]) out << code_hash(c) << "  " << to_record(decode(c)) << "\n";
  }
}

int run_homology(const HomologyArgs& a, bool json) {
  check_edges(a.max_edges, "--max-edges");
  const auto filter = filter_of(a.genus, a.marked);
  const auto kind = parse_complex(a.complex);
  const auto ex = execution();
  const auto slice = build_slice(kind, filter, !a.all_components, a.max_edges, ex);
  const auto table = homology_ranks(slice, RankMethod::sparse, ex);
  if (!a.emit_dir.empty()) emit_matrices(slice, a.emit_dir);
  bool dense_ok = true;
  if (a.check_dense) {
    auto dense = homology_ranks(slice, RankMethod::dense, ex);
    dense_ok = dense.ranks == table.ranks && dense.betti == table.betti;
  }
  const bool euler_ok = table.euler_betti() == table.euler_cells();
  if (json) {
    ordered_json j;
    j["homology"] = "unaugmented";
    j["complex"] = a.complex;
    j["filter"] = filter ? ordered_json::array({filter->genus, filter->marked}) : ordered_json();
    j["connected"] = !a.all_components;
    j["max_edges"] = a.max_edges;
    j["truncated"] = slice.truncated;
    auto& rows = j["degrees"] = ordered_json::array();
    for (std::size_t k = 1; k < table.dims.size(); ++k)
      rows.push_back({{"degree", k}, {"dim", table.dims[k]}, {"rank", table.ranks[k]}, {"betti", table.betti[k]}});
    j["euler_cells"] = table.euler_cells();
    j["euler_betti"] = table.euler_betti();
    if (a.check_dense) j["dense_agrees"] = dense_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# unaugmented graph-complex homology (no extra point in degree 0)\n";
    std::cout << "# complex=" << a.complex << " filter=" << (filter ? type_str(*filter) : std::string("none"))
              << " connected=" << (a.all_components ? "no" : "yes") << " max_edges=" << a.max_edges
              << " truncated=" << (slice.truncated ? "yes" : "no") << "\n";
    std::cout << std::setw(6) << "degree" << std::setw(8) << "dim" << std::setw(8) << "rank" << std::setw(8) << "betti"
              << "\n";
    for (std::size_t k = 1; k < table.dims.size(); ++k)
      std::cout << std::setw(6) << k << std::setw(8) << table.dims[k] << std::setw(8) << table.ranks[k]
                << std::setw(8) << table.betti[k] << "\n";
    std::cout << "euler cells=" << table.euler_cells() << " betti=" << table.euler_betti() << "\n";
    if (a.check_dense) std::cout << "dense oracle " << (dense_ok ? "agrees" : "DISAGREES") << "\n";
  }
  return dense_ok && euler_ok ? 0 : 1;
}

// ---- euler ----------------------------------------------------------------

int run_euler(const std::string& complex, int max_edges, int bound, bool json) {
  check_edges(max_edges, "--max-edges");
  if (bound < 1) throw UsageError("--euler-bound must be positive");
  auto rows = euler_table(parse_complex(complex), max_edges, bound, execution());
  if (json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      std::vector<int> cells(r.cells.begin() + 1, r.cells.end());
      j.push_back({{"genus", r.type.genus}, {"marked", r.type.marked}, {"cells", cells},
                   {"alternating", r.alternating}, {"truncated", r.truncated}});
    }
    std::cout << ordered_json{{"complex", complex}, {"max_edges", max_edges}, {"rows", j}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "# complex=" << complex << " connected generators, sum_E (-1)^E #cells\n";
  std::cout << std::setw(8) << "(g,n)";
  for (int e = 1; e <= max_edges; ++e) std::cout << std::setw(7) << ("E=" + std::to_string(e));
  std::cout << std::setw(8) << "alt" << "  truncated\n";
  for (const auto& r : rows) {
    std::cout << std::setw(8) << type_str(r.type);
    for (int e = 1; e <= max_edges; ++e) std::cout << std::setw(7) << r.cells[static_cast<std::size_t>(e)];
    std::cout << std::setw(8) << r.alternating << "  " << (r.truncated ? "yes" : "no") << "\n";
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

const std::map<std::string, std::function<VerifyReport(const VerifyOptions&)>>& suites() {
  static const std::map<std::string, std::function<VerifyReport(const VerifyOptions&)>> m{
      {"d2", verify_d2},
      {"contraction", verify_contraction_types},
      {"projections", verify_projections},
      {"bialgebra", verify_bialgebra},
      {"divergence", verify_divergence},
      {"bracket-oracle", verify_bracket_oracle},
      {"lambda", [](const VerifyOptions& o) { return verify_lambda(o); }},
      {"chainmap", verify_chain_map},
      {"hopf", verify_hopf},
      {"wick-rank", verify_wick_rank},
      {"chords", [](const VerifyOptions& o) { return verify_chords(o); }},
      {"homology", verify_homology},
      {"enumeration", verify_enumeration},
  };
  return m;
}

int run_verify(const std::string& name, int max_edges, int bound, int dim, std::uint64_t seed, bool json) {
  check_edges(max_edges, "--max-edges");
  if (bound < 1) throw UsageError("--euler-bound must be positive");
  if (dim < 1 || dim > 4) throw UsageError("--dim must lie in 1..4");
  auto it = suites().find(name);
  if (it == suites().end()) throw UsageError("unknown suite " + name);
  VerifyOptions o;
  o.max_edges = max_edges;
  o.euler_bound = bound;
  o.space = SymplecticSpace{dim};
  o.seed = seed;
  o.execution = execution();
  const auto r = it->second(o);
  if (json) {
    ordered_json j;
    j["suite"] = name;
    j["ok"] = r.ok();
    auto& gs = j["groups"] = ordered_json::array();
    for (const auto& g : r.groups) gs.push_back({{"name", g.name}, {"checked", g.checked}, {"failed", g.failed}});
    auto& lines = j["generators"] = ordered_json::array();
    for (const auto& g : r.generators) lines.push_back({{"hash", g.hash}, {"ok", g.ok}, {"detail", g.detail}});
    j["first_failure"] = r.first_failure ? ordered_json(*r.first_failure) : ordered_json();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : r.generators)
      std::cout << g.hash << "  " << (g.ok ? "ok" : "FAIL") << (g.detail.empty() ? "" : "  " + g.detail) << "\n";
    for (const auto& g : r.groups)
      std::cout << std::left << std::setw(28) << g.name << std::right << std::setw(10) << g.checked << " checked"
                << std::setw(8) << g.failed << " failed\n";
    if (r.ok())
      std::cout << name << ": PASS (" << r.checked() << " checks)\n";
    else
      std::cout << name << ": FAIL\nfirst counterexample: " << *r.first_failure << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  init_threads_from_env();
  CLI::App app{"Stable ribbon graph complexes: enumeration, boundaries, homology and checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output; rationals as p/q");

  EnumArgs ea;
  auto* en = app.add_subcommand("enumerate", "List canonical generators with a given edge count");
  en->add_option("--edges", ea.edges, "Edge count")->required();
  en->add_option("--genus", ea.genus, "Genus of every component");
  en->add_option("--marked", ea.marked, "Marked points of every component");
  en->add_option("--complex", ea.complex, "srgc, krgc or rgc")->capture_default_str();
  en->add_flag("--connected", ea.connected, "Connected generators only");
  en->add_flag("--include-zero", ea.include_zero, "Keep classes with an odd automorphism");

  std::string bpath, bcomplex = "srgc";
  auto* bd = app.add_subcommand("boundary", "Differential of a chain read from a graph file ('-' for stdin)");
  bd->add_option("file", bpath, "Graph file")->required();
  bd->add_option("--complex", bcomplex, "Project onto srgc, krgc or rgc")->capture_default_str();

  HomologyArgs ha;
  auto* ho = app.add_subcommand("homology", "Betti numbers of a slice of a complex");
  ho->add_option("--complex", ha.complex, "srgc, krgc or rgc")->capture_default_str();
  ho->add_option("--genus", ha.genus, "Genus filter");
  ho->add_option("--marked", ha.marked, "Marked points filter");
  ho->add_option("--max-edges", ha.max_edges, "Top degree")->required();
  ho->add_flag("--all", ha.all_components, "Include disconnected generators");
  ho->add_flag("--check-dense", ha.check_dense, "Recompute ranks by dense elimination and compare");
  ho->add_option("--emit-matrices", ha.emit_dir, "Write boundary matrices and bases into this directory");

  std::string ecomplex = "srgc";
  int emax = 0, ebound = kDefaultEulerBound;
  auto* eu = app.add_subcommand("euler", "Alternating cell counts per (g,n)");
  eu->add_option("--complex", ecomplex, "srgc, krgc or rgc")->capture_default_str();
  eu->add_option("--max-edges", emax, "Largest edge count")->required();
  eu->add_option("--euler-bound", ebound, "Types with 2g-2+n up to this bound")->capture_default_str();

  std::string vname;
  int vmax = 3, vdim = 2, vbound = kDefaultEulerBound;
  std::uint64_t vseed = VerifyOptions{}.seed;
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> names;
  for (const auto& [k, f] : suites()) names.push_back(k);
  ve->add_option("suite", vname, "Suite name")->required()->check(CLI::IsMember(names));
  ve->add_option("--max-edges", vmax, "Edge bound for graph suites")->capture_default_str();
  ve->add_option("--euler-bound", vbound, "Unfiltered generators: components with 2g-2+n up to this")
      ->capture_default_str();
  ve->add_option("--dim", vdim, "Symplectic dimension d of Q^{d|d} for algebra suites")->capture_default_str();
  ve->add_option("--seed", vseed, "Seed for randomized checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*en) return run_enumerate(ea, json);
    if (*bd) return run_boundary(bpath, bcomplex, json);
    if (*ho) return run_homology(ha, json);
    if (*eu) return run_euler(ecomplex, emax, ebound, json);
    if (*ve) return run_verify(vname, vmax, vbound, vdim, vseed, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
