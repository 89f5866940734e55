#include "srg/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace srg {

namespace {

// Position of h in its cycle: (vertex, cycle, index).
struct Place {
  std::size_t vertex = 0, cycle = 0, index = 0;
};

Place locate(const StableRibbonGraph& g, int h) {
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (std::size_t c = 0; c < g.vertices[v].cycles.size(); ++c) {
      const auto& cyc = g.vertices[v].cycles[c];
      auto it = std::find(cyc.begin(), cyc.end(), h);
      if (it != cyc.end()) return Place{v, c, static_cast<std::size_t>(it - cyc.begin())};
    }
  throw std::invalid_argument("contract_edge: half-edge not in any cycle");
}

// The arc of a cycle strictly after position `from`, stopping before the first of `stops`.
Cycle arc_after(const Cycle& c, std::size_t from, int stop_a, int stop_b) {
  Cycle out;
  for (std::size_t k = 1; k < c.size(); ++k) {
    int h = c[(from + k) % c.size()];
    if (h == stop_a || h == stop_b) break;
    out.push_back(h);
  }
  return out;
}

}  // namespace

ContractionOutcome contract_edge(const StableRibbonGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("contract_edge: no such edge");
  const int a = g.edges[static_cast<std::size_t>(e)][0];
  const int b = g.edges[static_cast<std::size_t>(e)][1];
  const Place pa = locate(g, a), pb = locate(g, b);
  ContractionOutcome out;
  out.sign = sign_of_parity(e);

  StableRibbonGraph h;
  Vertex merged;
  std::vector<std::size_t> dropped_vertices;
  if (pa.vertex != pb.vertex || pa.cycle != pb.cycle) {
    const auto& va = g.vertices[pa.vertex];
    const auto& vb = g.vertices[pb.vertex];
    const auto& ca = va.cycles[pa.cycle];
    const auto& cb = vb.cycles[pb.cycle];
    // c1's arc after a, then c2's arc after b
    Cycle joined = arc_after(ca, pa.index, a, a);
    Cycle tail = arc_after(cb, pb.index, b, b);
    joined.insert(joined.end(), tail.begin(), tail.end());
    if (pa.vertex != pb.vertex) {
      out.kind = ContractionCase::non_loop;
      merged.genus = va.genus + vb.genus;
      merged.boundary = va.boundary + vb.boundary;
      for (std::size_t c = 0; c < va.cycles.size(); ++c)
        if (c != pa.cycle) merged.cycles.push_back(va.cycles[c]);
      for (std::size_t c = 0; c < vb.cycles.size(); ++c)
        if (c != pb.cycle) merged.cycles.push_back(vb.cycles[c]);
      dropped_vertices = {pa.vertex, pb.vertex};
    } else {
      out.kind = ContractionCase::loop_two_cycles;
      merged.genus = va.genus + 1;
      merged.boundary = va.boundary;
      for (std::size_t c = 0; c < va.cycles.size(); ++c)
        if (c != pa.cycle && c != pb.cycle) merged.cycles.push_back(va.cycles[c]);
      dropped_vertices = {pa.vertex};
    }
    if (joined.empty())
      merged.boundary += 1;
    else
      merged.cycles.insert(merged.cycles.begin(), std::move(joined));
  } else {
    out.kind = ContractionCase::loop_one_cycle;
    const auto& va = g.vertices[pa.vertex];
    const auto& c = va.cycles[pa.cycle];
    merged.genus = va.genus;
    merged.boundary = va.boundary;
    Cycle x = arc_after(c, pa.index, b, b);
    Cycle y = arc_after(c, pb.index, a, a);
    std::vector<Cycle> parts;
    for (auto* part : {&x, &y}) {
      if (part->empty())
        merged.boundary += 1;
      else
        parts.push_back(std::move(*part));
    }
    for (std::size_t k = 0; k < va.cycles.size(); ++k)
      if (k != pa.cycle) parts.push_back(va.cycles[k]);
    merged.cycles = std::move(parts);
    dropped_vertices = {pa.vertex};
  }
  // a vertex left without half-edges cannot be formed
  if (merged.cycles.empty()) return out;

  // assemble, merged vertex in place of the first dropped one
  const std::size_t first = *std::min_element(dropped_vertices.begin(), dropped_vertices.end());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (v == first)
      h.vertices.push_back(merged);
    else if (std::find(dropped_vertices.begin(), dropped_vertices.end(), v) == dropped_vertices.end())
      h.vertices.push_back(g.vertices[v]);
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (static_cast<int>(k) != e) h.edges.push_back(g.edges[k]);
  // compact relabeling of the surviving half-edges
  std::vector<int> perm(static_cast<std::size_t>(g.half_edge_count()), -1);
  int next = 0;
  for (int x = 0; x < g.half_edge_count(); ++x)
    if (x != a && x != b) perm[static_cast<std::size_t>(x)] = next++;
  for (auto& ed : h.edges)
    for (auto& x : ed) x = perm[static_cast<std::size_t>(x)];
  for (auto& v : h.vertices)
    for (auto& cy : v.cycles)
      for (auto& x : cy) x = perm[static_cast<std::size_t>(x)];
  out.graph = std::move(h);
  return out;
}

GraphChain boundary(const StableRibbonGraph& g) {
  GraphChain out;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto r = contract_edge(g, e);
    if (r.contractible()) add_graph(out, *r.graph, r.sign);
  }
  return out;
}

GraphChain boundary(const GraphChain& c, Execution ex) {
  std::vector<std::pair<GraphCode, Rational>> items(c.begin(), c.end());
  return map_reduce(
      items,
      [](const std::pair<GraphCode, Rational>& it) {
        GraphChain part = boundary(decode(it.first));
        part *= it.second;
        return part;
      },
      GraphChain{}, [](GraphChain& acc, GraphChain part) { acc += part; }, ex);
}

const char* to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::srgc: return "srgc";
    case ComplexKind::krgc: return "krgc";
    case ComplexKind::rgc: return "rgc";
  }
  return "?";
}

ComplexKind parse_complex(std::string_view s) {
  if (s == "srgc") return ComplexKind::srgc;
  if (s == "krgc") return ComplexKind::krgc;
  if (s == "rgc") return ComplexKind::rgc;
  throw std::invalid_argument("unknown complex '" + std::string(s) + "' (expected srgc, krgc or rgc)");
}

bool in_complex(const StableRibbonGraph& g, ComplexKind k) {
  for (const auto& v : g.vertices) {
    if (k != ComplexKind::srgc && v.boundary != 0) return false;
    if (k == ComplexKind::rgc && (v.genus != 0 || v.cycles.size() != 1)) return false;
  }
  return true;
}

GraphChain project(const GraphChain& c, ComplexKind k) {
  if (k == ComplexKind::srgc) return c;
  GraphChain out;
  for (const auto& [code, q] : c)
    if (in_complex(decode(code), k)) out.add(code, q);
  return out;
}

GraphChain differential(const GraphChain& c, ComplexKind k, Execution ex) { return project(boundary(c, ex), k); }

}  // namespace srg
