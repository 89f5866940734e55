#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "srg/complex.hpp"

#include <random>
#include <set>

using namespace srg;

namespace {

StableRibbonGraph one_loop(int genus, int boundary) {
  StableRibbonGraph g;
  g.edges = {{0, 1}};
  g.vertices = {Vertex{{{0, 1}}, genus, boundary}};
  return g;
}

std::vector<StableRibbonGraph> corpus(int max_edges) {
  std::vector<StableRibbonGraph> out;
  for (int e = 1; e <= max_edges; ++e) {
    EnumerationOptions o;
    o.edges = e;
    o.connected = false;
    o.include_zero = true;
    for (const auto& c : enumerate(o)) out.push_back(decode(c));
  }
  return out;
}

StableRibbonGraph shuffled(const StableRibbonGraph& g, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.half_edge_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto h = relabel(g, perm);
  std::shuffle(h.edges.begin(), h.edges.end(), rng);
  for (auto& e : h.edges)
    if (rng() % 2) std::swap(e[0], e[1]);
  std::shuffle(h.vertices.begin(), h.vertices.end(), rng);
  for (auto& v : h.vertices) {
    std::shuffle(v.cycles.begin(), v.cycles.end(), rng);
    for (auto& c : v.cycles) std::rotate(c.begin(), c.begin() + static_cast<long>(rng() % c.size()), c.end());
  }
  return h;
}

// sigma_inf recomputed from the raw tables: apply sigma1, then sigma0^{-1}.
int orbit_count(const StableRibbonGraph& g) {
  auto t = oracle::tables_of(g);
  std::vector<int> inv0(t.s0.size());
  for (std::size_t h = 0; h < t.s0.size(); ++h) inv0[static_cast<std::size_t>(t.s0[h])] = static_cast<int>(h);
  std::vector<char> seen(t.s0.size(), 0);
  int orbits = 0;
  for (std::size_t h = 0; h < t.s0.size(); ++h) {
    if (seen[h]) continue;
    ++orbits;
    for (int x = static_cast<int>(h); !seen[static_cast<std::size_t>(x)]; x = inv0[static_cast<std::size_t>(t.s1[static_cast<std::size_t>(x)])])
      seen[static_cast<std::size_t>(x)] = 1;
  }
  return orbits;
}

}  // namespace

TEST_CASE("validate examples") {
  auto v = validate(one_loop(0, 0));
  REQUIRE(v.has_value());
  CHECK(v->find("(4)") != std::string::npos);
  CHECK_FALSE(validate(interleaved_two_loop()).has_value());
  CHECK_FALSE(validate(theta_graph()).has_value());
  StableRibbonGraph fixed;
  fixed.edges = {{0, 0}};
  fixed.vertices = {Vertex{{{0, 1}}, 1, 0}};
  auto f = validate(fixed);
  REQUIRE(f.has_value());
  CHECK(f->rfind("(1)", 0) == 0);
  StableRibbonGraph empty_vertex = one_loop(1, 0);
  empty_vertex.vertices.push_back(Vertex{{}, 1, 0});
  CHECK(validate(empty_vertex).has_value());
  CHECK_THROWS_AS(require_valid(one_loop(0, 0)), std::invalid_argument);
  CHECK_FALSE(validate(one_loop(0, 1)).has_value());
}

TEST_CASE("perimeters") {
  CHECK(perimeters(interleaved_two_loop()).size() == 1);
  CHECK(perimeters(theta_graph()).size() == 3);
  for (const auto& g : corpus(3)) CHECK(static_cast<int>(perimeters(g).size()) == orbit_count(g));
  auto a = theta_graph(), b = interleaved_two_loop();
  auto u = disjoint_union(a, b);
  auto sizes = [](const StableRibbonGraph& g) {
    std::multiset<std::size_t> s;
    for (const auto& p : perimeters(g)) s.insert(p.size());
    return s;
  };
  auto expect = sizes(a);
  for (auto s : sizes(b)) expect.insert(s);
  CHECK(sizes(u) == expect);
}

TEST_CASE("recover (g,n)") {
  CHECK(recover_g_n(interleaved_two_loop()) == GenusMarked{1, 1});
  CHECK(recover_g_n(theta_graph()) == GenusMarked{0, 3});
  auto t = theta_graph();
  t.vertices[0].genus += 1;
  CHECK(recover_g_n(t) == GenusMarked{1, 3});
  CHECK(recover_g_n(one_loop(0, 1)) == GenusMarked{0, 3});
  CHECK_THROWS_AS(recover_g_n(disjoint_union(theta_graph(), theta_graph())), std::invalid_argument);
  CHECK_THROWS_AS(recover_g_n(StableRibbonGraph{}), std::invalid_argument);
}

TEST_CASE("every enumerated component has integer stable (g,n)") {
  for (const auto& g : corpus(4))
    for (const auto& c : split_components(g)) {
      auto gn = recover_g_n(c);
      CHECK(gn.genus >= 0);
      CHECK(2 * gn.genus - 2 + gn.marked > 0);
    }
}

TEST_CASE("split components keep edge order and structure") {
  auto u = disjoint_union(theta_graph(), interleaved_two_loop());
  CHECK_FALSE(is_connected(u));
  auto parts = split_components(u);
  REQUIRE(parts.size() == 2);
  CHECK(canonical_form(parts[0]).code == canonical_form(theta_graph()).code);
  CHECK(canonical_form(parts[1]).code == canonical_form(interleaved_two_loop()).code);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(7);
  auto theta = theta_graph();
  const auto code = canonical_form(theta).code;
  for (int k = 0; k < 50; ++k) CHECK(canonical_form(shuffled(theta, rng)).code == code);
  for (const auto& g : corpus(3)) {
    const auto cg = canonical_form(g);
    for (int k = 0; k < 3; ++k) {
      auto h = shuffled(g, rng);
      const auto ch = canonical_form(h);
      REQUIRE(ch.code == cg.code);
      // sign changes by the parity of any isomorphism
      auto isos = oracle::all_isos(g, h);
      REQUIRE_FALSE(isos.empty());
      if (!cg.zero) CHECK(ch.sign == cg.sign * sign_of_parity(isos.front()));
    }
  }
}

TEST_CASE("canonical form is idempotent") {
  for (const auto& g : corpus(3)) {
    auto c = canonical_form(g);
    auto d = decode(c.code);
    auto again = canonical_form(d);
    CHECK(again.code == c.code);
    CHECK(again.sign == 1);
    CHECK(decode(again.code) == d);
  }
}

TEST_CASE("equal codes iff brute-force isomorphic") {
  auto gs = corpus(3);
  auto profile = [](const StableRibbonGraph& g) {
    std::vector<std::array<int, 4>> p;
    for (const auto& v : g.vertices) p.push_back({v.valency(), static_cast<int>(v.cycles.size()), v.genus, v.boundary});
    std::sort(p.begin(), p.end());
    return std::make_pair(g.edge_count(), p);
  };
  std::set<GraphCode> codes;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    codes.insert(canonical_form(gs[i]).code);
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (profile(gs[i]) != profile(gs[j])) continue;
      CHECK(oracle::all_isos(gs[i], gs[j]).empty());
    }
  }
  CHECK(codes.size() == gs.size());
}

TEST_CASE("automorphisms and zero flag match brute force") {
  for (const auto& g : corpus(3)) {
    auto autos = oracle::all_isos(g, g);
    auto c = canonical_form(g);
    CHECK(c.automorphisms == static_cast<int>(autos.size()));
    bool odd = std::find(autos.begin(), autos.end(), 1) != autos.end();
    CHECK(c.zero == odd);
  }
  auto theta = theta_graph();
  CHECK(automorphism_count(theta) == static_cast<int>(oracle::all_isos(theta, theta).size()));
  CHECK(canonical_form(theta).zero);
  CHECK(canonical_form(interleaved_two_loop()).zero);
}

TEST_CASE("disjoint unions") {
  auto a = one_loop(1, 0), b = one_loop(0, 1);
  CHECK(automorphism_count(disjoint_union(a, b)) == automorphism_count(a) * automorphism_count(b));
  // two copies of a one-edge graph: the swap is an odd edge permutation
  auto aa = disjoint_union(a, a);
  CHECK(canonical_form(aa).zero);
  auto brute = oracle::all_isos(aa, aa);
  CHECK(std::find(brute.begin(), brute.end(), 1) != brute.end());
  // unit
  auto u = disjoint_union(StableRibbonGraph{}, a);
  CHECK(canonical_form(u).code == canonical_form(a).code);
  // swapping the factors costs the block swap parity E1*E2
  StableRibbonGraph two;
  two.edges = {{0, 1}, {2, 3}};
  two.vertices = {Vertex{{{0}}, 1, 0}, Vertex{{{1, 2, 3}}, 0, 0}};
  REQUIRE_FALSE(validate(two).has_value());
  auto ab = canonical_form(disjoint_union(a, two)), ba = canonical_form(disjoint_union(two, a));
  REQUIRE_FALSE(ab.zero);
  CHECK(ab.code == ba.code);
  CHECK(ab.sign == ba.sign * sign_of_parity(a.edge_count() * two.edge_count()));
}

TEST_CASE("graph record format") {
  auto g = interleaved_two_loop();
  auto text = to_record(g);
  CHECK(text == "E=2; sigma1=[(0,2),(1,3)]; vertices=[[cycle=[0,1,2,3]; g=0; n=0]]; orient=[0,1]");
  CHECK(parse_record(text) == g);
  for (const auto& h : corpus(3)) CHECK(parse_record(to_record(h)) == h);
  auto swapped = parse_record("E=2; sigma1=[(0,2),(1,3)]; vertices=[[cycle=[0,1,2,3]; g=0; n=0]]; orient=[1,0]");
  CHECK(swapped.edges[0] == std::array<int, 2>{1, 3});
  CHECK_THROWS_AS(parse_record("E=2; sigma1=[(0,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_record("nonsense"), std::invalid_argument);
}

TEST_CASE("code hash") {
  auto gs = corpus(3);
  std::set<std::string> hashes;
  for (const auto& g : gs) {
    auto h = code_hash(canonical_form(g).code);
    CHECK(h.size() == 16);
    hashes.insert(h);
  }
  CHECK(hashes.size() == gs.size());
  CHECK(code_hash(canonical_form(theta_graph()).code) == code_hash(canonical_form(theta_graph()).code));
}

TEST_CASE("batch canonicalization: serial equals parallel") {
  auto gs = corpus(3);
  auto a = canonical_forms(gs, Execution::serial);
  auto b = canonical_forms(gs, Execution::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].code == b[i].code);
    CHECK(a[i].sign == b[i].sign);
  }
}

TEST_CASE("decode rejects malformed codes") {
  CHECK_THROWS_AS(decode(GraphCode{3, 1, 7}), std::invalid_argument);
  CHECK(decode(GraphCode{0, 0}).edges.empty());
}
