#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/complex.hpp"

using namespace srg;

namespace {

std::vector<StableRibbonGraph> corpus(int max_edges, bool zero = true) {
  std::vector<StableRibbonGraph> out;
  for (int e = 1; e <= max_edges; ++e) {
    EnumerationOptions o;
    o.edges = e;
    o.connected = false;
    o.include_zero = zero;
    for (const auto& c : enumerate(o)) out.push_back(decode(c));
  }
  return out;
}

StableRibbonGraph graph(std::vector<std::array<int, 2>> edges, std::vector<Vertex> vs) {
  StableRibbonGraph g;
  g.edges = std::move(edges);
  g.vertices = std::move(vs);
  return g;
}

// edge e moved to the front, everything else in order
StableRibbonGraph front(const StableRibbonGraph& g, int e) {
  auto h = g;
  std::rotate(h.edges.begin(), h.edges.begin() + e, h.edges.begin() + e + 1);
  return h;
}

}  // namespace

TEST_CASE("non-loop edge merges two vertices") {
  auto theta = theta_graph();
  REQUIRE(theta.vertices.size() == 2);
  auto r = contract_edge(theta, 0);
  CHECK(r.kind == ContractionCase::non_loop);
  REQUIRE(r.contractible());
  CHECK(r.sign == 1);
  CHECK_FALSE(validate(*r.graph).has_value());
  CHECK(r.graph->vertices.size() == 1);
  CHECK(r.graph->edge_count() == 2);
  // planar figure eight, not the interleaved two-loop
  CHECK(*r.graph == graph({{0, 2}, {1, 3}}, {Vertex{{{0, 1, 3, 2}}, 0, 0}}));
  CHECK(recover_g_n(*r.graph) == GenusMarked{0, 3});
  CHECK(contract_edge(theta, 1).sign == -1);
  CHECK(contract_edge(theta, 2).sign == 1);
}

TEST_CASE("explicit non-loop merge keeps defects and splices cycles") {
  // v0: [0,2], v1: [1,3,4]; contract {0,1}
  auto g = graph({{0, 1}, {2, 3}, {4, 5}}, {Vertex{{{0, 2}, {5}}, 1, 0}, Vertex{{{1, 3, 4}}, 0, 1}});
  REQUIRE_FALSE(validate(g).has_value());
  auto r = contract_edge(g, 0);
  REQUIRE(r.contractible());
  // arcs [2] and [3,4] joined, then the untouched [5]; relabel 2..5 -> 0..3
  auto expect = graph({{0, 1}, {2, 3}}, {Vertex{{{0, 1, 2}, {3}}, 1, 1}});
  CHECK(*r.graph == expect);
  CHECK(recover_g_n(*r.graph) == recover_g_n(g));
}

TEST_CASE("loop joining two cycles raises the vertex genus") {
  auto g = graph({{0, 1}, {2, 3}}, {Vertex{{{0, 2}, {1, 3}}, 0, 0}});
  REQUIRE_FALSE(validate(g).has_value());
  auto r = contract_edge(g, 0);
  CHECK(r.kind == ContractionCase::loop_two_cycles);
  REQUIRE(r.contractible());
  CHECK(*r.graph == graph({{0, 1}}, {Vertex{{{0, 1}}, 1, 0}}));
  CHECK(recover_g_n(*r.graph) == recover_g_n(g));
}

TEST_CASE("two-half-edge cycle beside another cycle gives two boundaries") {
  auto g = graph({{0, 1}, {2, 3}}, {Vertex{{{0, 1}, {2, 3}}, 0, 0}});
  REQUIRE_FALSE(validate(g).has_value());
  auto r = contract_edge(g, 0);
  CHECK(r.kind == ContractionCase::loop_one_cycle);
  REQUIRE(r.contractible());
  CHECK(*r.graph == graph({{0, 1}}, {Vertex{{{0, 1}}, 0, 2}}));
  CHECK(recover_g_n(*r.graph) == recover_g_n(g));
}

TEST_CASE("loop in the only cycle splits it") {
  auto two = interleaved_two_loop();
  auto r = contract_edge(two, 0);
  CHECK(r.kind == ContractionCase::loop_one_cycle);
  REQUIRE(r.contractible());
  CHECK(r.graph->vertices.size() == 1);
  CHECK(r.graph->vertices[0].cycles.size() == 2);
  CHECK(recover_g_n(*r.graph) == GenusMarked{1, 1});
  CHECK(contract_edge(two, 1).sign == -1);
}

TEST_CASE("a vertex whose only cycle is a two-half-edge loop is not contractible") {
  StableRibbonGraph g = graph({{0, 1}}, {Vertex{{{0, 1}}, 1, 0}});
  auto r = contract_edge(g, 0);
  CHECK(r.kind == ContractionCase::loop_one_cycle);
  CHECK_FALSE(r.contractible());
  CHECK(boundary(g).is_zero());
  CHECK_THROWS_AS(contract_edge(g, 1), std::out_of_range);
  CHECK_THROWS_AS(contract_edge(g, -1), std::out_of_range);
}

TEST_CASE("input is not modified") {
  for (const auto& g : corpus(3)) {
    const auto copy = g;
    for (int e = 0; e < g.edge_count(); ++e) (void)contract_edge(g, e);
    (void)boundary(g);
    CHECK(g == copy);
  }
}

TEST_CASE("contraction sign is the position of the edge") {
  for (const auto& g : corpus(3))
    for (int e = 0; e < g.edge_count(); ++e) {
      auto r = contract_edge(g, e), s = contract_edge(front(g, e), 0);
      CHECK(r.sign == (e % 2 == 0 ? 1 : -1));
      CHECK(s.sign == 1);
      REQUIRE(r.contractible() == s.contractible());
      if (r.contractible()) CHECK(*r.graph == *s.graph);
    }
}

TEST_CASE("contractions are valid, drop one edge, and keep every component type") {
  for (const auto& g : corpus(4)) {
    auto types = [](const StableRibbonGraph& h) {
      std::vector<GenusMarked> t;
      for (const auto& c : split_components(h)) t.push_back(recover_g_n(c));
      std::sort(t.begin(), t.end());
      return t;
    };
    const auto before = types(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto r = contract_edge(g, e);
      if (!r.contractible()) continue;
      CHECK_FALSE(validate(*r.graph).has_value());
      CHECK(r.graph->edge_count() == g.edge_count() - 1);
      CHECK(types(*r.graph) == before);
    }
  }
}

TEST_CASE("boundary squares to zero") {
  for (const auto& g : corpus(4)) {
    auto d = boundary(g);
    CHECK(boundary(d).is_zero());
    for (auto k : {ComplexKind::krgc, ComplexKind::rgc}) {
      auto once = differential(project(chain_of(g), k), k);
      CHECK(differential(once, k).is_zero());
    }
  }
}

TEST_CASE("zero-flagged graphs have zero boundary") {
  CHECK(boundary(theta_graph()).is_zero());
  CHECK(boundary(interleaved_two_loop()).is_zero());
  for (const auto& g : corpus(4))
    if (canonical_form(g).zero) CHECK(boundary(g).is_zero());
}

TEST_CASE("projections commute with the differential") {
  for (const auto& g : corpus(4, false)) {
    auto c = chain_of(g);
    for (auto k : {ComplexKind::krgc, ComplexKind::rgc})
      CHECK(project(boundary(c), k) == differential(project(c, k), k) + project(boundary(c - project(c, k)), k));
    // generators outside a subcomplex never hit it
    if (!in_complex(g, ComplexKind::krgc)) CHECK(project_krgc(boundary(c)).is_zero());
    if (!in_complex(g, ComplexKind::rgc)) CHECK(project_rgc(boundary(c)).is_zero());
  }
}

TEST_CASE("serial and parallel boundary agree") {
  GraphChain c;
  int k = 1;
  for (const auto& g : corpus(4, false)) add_graph(c, g, Rational(k++ % 7 - 3, 2));
  CHECK(boundary(c, Execution::serial) == boundary(c, Execution::parallel));
}

TEST_CASE("complex names") {
  for (auto k : {ComplexKind::srgc, ComplexKind::krgc, ComplexKind::rgc}) CHECK(parse_complex(to_string(k)) == k);
  CHECK_THROWS_AS(parse_complex("gc"), std::invalid_argument);
}
