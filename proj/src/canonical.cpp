#include "srg/ribbon.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace srg {

namespace {

int permutation_parity(std::vector<int> p) {
  int parity = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      parity ^= 1;
    }
  }
  return parity;
}

struct ConnectedResult {
  GraphCode code;
  std::vector<int> edge_position;  // input edge -> canonical position (first best leaf)
  int sign = 1;
  bool zero = false;
  int automorphisms = 0;
};

// Labeling search on a connected graph. Every branch point offers an
// isomorphism-invariant set of choices, so the least code reached is a
// complete invariant, and the number of leaves reaching it is |Aut|.
class LabelSearch {
 public:
  explicit LabelSearch(const StableRibbonGraph& g) : g_(g), t_(tables(g)) {
    for (const auto& v : g.vertices)
      for (const auto& c : v.cycles) cycles_.push_back(&c);
    cycle_start_.assign(static_cast<std::size_t>(g.half_edge_count()), 0);
    for (const auto* c : cycles_)
      for (std::size_t k = 0; k < c->size(); ++k) cycle_start_[static_cast<std::size_t>((*c)[k])] = static_cast<int>(k);
    vertex_first_cycle_.push_back(0);
    for (const auto& v : g.vertices)
      vertex_first_cycle_.push_back(vertex_first_cycle_.back() + static_cast<int>(v.cycles.size()));
  }

  ConnectedResult run() {
    State s;
    const auto H = static_cast<std::size_t>(g_.half_edge_count());
    s.label.assign(H, -1);
    s.order.reserve(H);
    s.vertex_entry.assign(g_.vertices.size(), -1);
    s.cycle_done.assign(cycles_.size(), 0);
    search(s);
    return std::move(result_);
  }

 private:
  struct State {
    std::vector<int> label;
    std::vector<int> order;
    std::vector<int> vertex_entry;
    std::vector<int> entered;
    std::vector<char> cycle_done;
    std::size_t sweep = 0;
  };

  void label_cycle(State& s, int cycle, int start) const {
    const auto& c = *cycles_[static_cast<std::size_t>(cycle)];
    const std::size_t n = c.size();
    const std::size_t k0 = static_cast<std::size_t>(cycle_start_[static_cast<std::size_t>(start)]);
    for (std::size_t k = 0; k < n; ++k) {
      int h = c[(k0 + k) % n];
      s.label[static_cast<std::size_t>(h)] = static_cast<int>(s.order.size());
      s.order.push_back(h);
    }
    s.cycle_done[static_cast<std::size_t>(cycle)] = 1;
    int v = t_.vertex[static_cast<std::size_t>(start)];
    if (s.vertex_entry[static_cast<std::size_t>(v)] < 0) {
      s.vertex_entry[static_cast<std::size_t>(v)] = static_cast<int>(s.entered.size());
      s.entered.push_back(v);
    }
  }

  void sweep(State& s) const {
    while (s.sweep < s.order.size()) {
      int h = s.order[s.sweep++];
      int p = t_.sigma1[static_cast<std::size_t>(h)];
      int c = t_.cycle[static_cast<std::size_t>(p)];
      if (!s.cycle_done[static_cast<std::size_t>(c)]) label_cycle(s, c, p);
    }
  }

  void search(State& s) {
    sweep(s);
    if (s.order.size() == static_cast<std::size_t>(g_.half_edge_count())) {
      leaf(s);
      return;
    }
    for (int v : s.entered) {
      bool open = false;
      for (int c = vertex_first_cycle_[static_cast<std::size_t>(v)]; c < vertex_first_cycle_[static_cast<std::size_t>(v) + 1]; ++c) {
        if (s.cycle_done[static_cast<std::size_t>(c)]) continue;
        open = true;
        for (int h : *cycles_[static_cast<std::size_t>(c)]) {
          State next = s;
          label_cycle(next, c, h);
          search(next);
        }
      }
      if (open) return;
    }
    // start of the (only) component
    for (int h = 0; h < g_.half_edge_count(); ++h) {
      if (s.label[static_cast<std::size_t>(h)] >= 0) continue;
      State next = s;
      label_cycle(next, t_.cycle[static_cast<std::size_t>(h)], h);
      search(next);
    }
  }

  void leaf(const State& s) {
    const auto H = s.order.size();
    GraphCode code;
    code.reserve(2 + 3 * H + 2 * g_.vertices.size());
    code.push_back(static_cast<std::int16_t>(g_.edge_count()));
    code.push_back(static_cast<std::int16_t>(g_.vertices.size()));
    for (std::size_t l = 0; l < H; ++l) {
      auto h = static_cast<std::size_t>(s.order[l]);
      code.push_back(static_cast<std::int16_t>(s.label[static_cast<std::size_t>(t_.sigma1[h])]));
      code.push_back(static_cast<std::int16_t>(s.label[static_cast<std::size_t>(t_.sigma0[h])]));
      code.push_back(static_cast<std::int16_t>(s.vertex_entry[static_cast<std::size_t>(t_.vertex[h])]));
    }
    for (int v : s.entered) {
      code.push_back(static_cast<std::int16_t>(g_.vertices[static_cast<std::size_t>(v)].genus));
      code.push_back(static_cast<std::int16_t>(g_.vertices[static_cast<std::size_t>(v)].boundary));
    }
    const bool first = result_.automorphisms == 0;
    if (!first && code > result_.code) return;
    // canonical edge order: by smaller label
    const std::size_t E = g_.edges.size();
    std::vector<std::pair<int, int>> keyed(E);
    for (std::size_t k = 0; k < E; ++k)
      keyed[k] = {std::min(s.label[static_cast<std::size_t>(g_.edges[k][0])], s.label[static_cast<std::size_t>(g_.edges[k][1])]),
                  static_cast<int>(k)};
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> pos(E);
    for (std::size_t r = 0; r < E; ++r) pos[static_cast<std::size_t>(keyed[r].second)] = static_cast<int>(r);
    const int sign = sign_of_parity(permutation_parity(pos));
    if (first || code < result_.code) {
      result_.code = std::move(code);
      result_.edge_position = std::move(pos);
      result_.sign = sign;
      result_.zero = false;
      result_.automorphisms = 1;
    } else {
      ++result_.automorphisms;
      if (sign != result_.sign) result_.zero = true;
    }
  }

  const StableRibbonGraph& g_;
  HalfEdgeTables t_;
  std::vector<const Cycle*> cycles_;
  std::vector<int> cycle_start_;
  std::vector<int> vertex_first_cycle_;
  ConnectedResult result_;
};

ConnectedResult canonical_connected(const StableRibbonGraph& g) { return LabelSearch(g).run(); }

// Components with the input edge indices they carry.
struct Component {
  StableRibbonGraph graph;
  std::vector<int> input_edges;
};

std::vector<Component> components_with_edges(const StableRibbonGraph& g) {
  auto parts = split_components(g);
  auto t = tables(g);
  // flood fill in vertex order numbers components the same way split_components does
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    int a = t.vertex[static_cast<std::size_t>(e[0])], b = t.vertex[static_cast<std::size_t>(e[1])];
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> comp_of_vertex(g.vertices.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (comp_of_vertex[v] >= 0) continue;
    std::vector<int> stack{static_cast<int>(v)};
    comp_of_vertex[v] = next;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)])
        if (comp_of_vertex[static_cast<std::size_t>(y)] < 0) {
          comp_of_vertex[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  std::vector<Component> out(parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c) out[c].graph = std::move(parts[c]);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    int c = comp_of_vertex[static_cast<std::size_t>(t.vertex[static_cast<std::size_t>(g.edges[k][0])])];
    out[static_cast<std::size_t>(c)].input_edges.push_back(static_cast<int>(k));
  }
  return out;
}

}  // namespace

GraphClass canonical_form(const StableRibbonGraph& g) {
  require_valid(g);
  GraphClass out;
  if (g.vertices.empty()) {
    out.code = GraphCode{0, 0};
    return out;
  }
  auto comps = components_with_edges(g);
  if (comps.size() == 1) {
    auto r = canonical_connected(g);
    out.code = std::move(r.code);
    out.sign = r.sign;
    out.zero = r.zero;
    out.automorphisms = r.automorphisms;
    return out;
  }
  std::vector<ConnectedResult> res;
  for (const auto& c : comps) res.push_back(canonical_connected(c.graph));
  std::vector<std::size_t> order(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return res[a].code < res[b].code; });

  StableRibbonGraph canon;
  std::vector<int> pos(g.edges.size());
  int edge_offset = 0;
  out.automorphisms = 1;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& cr = res[order[r]];
    const auto& comp = comps[order[r]];
    canon = disjoint_union(canon, decode(cr.code));
    for (std::size_t k = 0; k < comp.input_edges.size(); ++k)
      pos[static_cast<std::size_t>(comp.input_edges[k])] = edge_offset + cr.edge_position[k];
    edge_offset += static_cast<int>(comp.input_edges.size());
    out.automorphisms *= cr.automorphisms;
    if (cr.zero) out.zero = true;
  }
  // identical components: permuting them is an automorphism of parity E_i per swap
  for (std::size_t r = 0; r < order.size();) {
    std::size_t s = r;
    while (s < order.size() && res[order[s]].code == res[order[r]].code) ++s;
    const auto mult = static_cast<int>(s - r);
    for (int m = 2; m <= mult; ++m) out.automorphisms *= m;
    if (mult >= 2 && comps[order[r]].input_edges.size() % 2 == 1) out.zero = true;
    r = s;
  }
  out.sign = sign_of_parity(permutation_parity(pos));
  // encode the canonical union under its identity labeling
  auto t = tables(canon);
  const auto H = static_cast<std::size_t>(canon.half_edge_count());
  out.code.push_back(static_cast<std::int16_t>(canon.edge_count()));
  out.code.push_back(static_cast<std::int16_t>(canon.vertices.size()));
  for (std::size_t h = 0; h < H; ++h) {
    out.code.push_back(static_cast<std::int16_t>(t.sigma1[h]));
    out.code.push_back(static_cast<std::int16_t>(t.sigma0[h]));
    out.code.push_back(static_cast<std::int16_t>(t.vertex[h]));
  }
  for (const auto& v : canon.vertices) {
    out.code.push_back(static_cast<std::int16_t>(v.genus));
    out.code.push_back(static_cast<std::int16_t>(v.boundary));
  }
  return out;
}

StableRibbonGraph decode(const GraphCode& code) {
  auto bad = [] { throw std::invalid_argument("decode: malformed graph code"); };
  if (code.size() < 2) bad();
  const int E = code[0], V = code[1];
  if (E < 0 || V < 0) bad();
  const auto H = static_cast<std::size_t>(2 * E);
  if (code.size() != 2 + 3 * H + 2 * static_cast<std::size_t>(V)) bad();
  StableRibbonGraph g;
  g.vertices.resize(static_cast<std::size_t>(V));
  std::vector<int> s1(H), s0(H), vx(H);
  for (std::size_t l = 0; l < H; ++l) {
    s1[l] = code[2 + 3 * l];
    s0[l] = code[3 + 3 * l];
    vx[l] = code[4 + 3 * l];
    if (s1[l] < 0 || s1[l] >= static_cast<int>(H) || s0[l] < 0 || s0[l] >= static_cast<int>(H) || vx[l] < 0 || vx[l] >= V)
      bad();
  }
  for (std::size_t l = 0; l < H; ++l) {
    if (s1[static_cast<std::size_t>(s1[l])] != static_cast<int>(l)) bad();
    if (static_cast<int>(l) < s1[l]) g.edges.push_back({static_cast<int>(l), s1[l]});
  }
  std::vector<char> seen(H, 0);
  for (std::size_t l = 0; l < H; ++l) {
    if (seen[l]) continue;
    Cycle c;
    for (int x = static_cast<int>(l); !seen[static_cast<std::size_t>(x)]; x = s0[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      if (vx[static_cast<std::size_t>(x)] != vx[l]) bad();
      c.push_back(x);
    }
    g.vertices[static_cast<std::size_t>(vx[l])].cycles.push_back(std::move(c));
  }
  for (std::size_t v = 0; v < static_cast<std::size_t>(V); ++v) {
    g.vertices[v].genus = code[2 + 3 * H + 2 * v];
    g.vertices[v].boundary = code[3 + 3 * H + 2 * v];
  }
  if (auto err = validate(g)) bad();
  return g;
}

int automorphism_count(const StableRibbonGraph& g) { return canonical_form(g).automorphisms; }

std::string code_hash(const GraphCode& code) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : code) {
    auto u = static_cast<std::uint16_t>(v);
    for (int b = 0; b < 2; ++b) {
      h ^= (u >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<GraphClass> canonical_forms(const std::vector<StableRibbonGraph>& gs, Execution ex) {
  return map_items(gs, [](const StableRibbonGraph& g) { return canonical_form(g); }, ex);
}

}  // namespace srg
