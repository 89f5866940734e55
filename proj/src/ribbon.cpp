#include "srg/ribbon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace srg {

int Vertex::valency() const {
  int v = 0;
  for (const auto& c : cycles) v += static_cast<int>(c.size());
  return v;
}

int StableRibbonGraph::cycle_count() const {
  int c = 0;
  for (const auto& v : vertices) c += static_cast<int>(v.cycles.size());
  return c;
}

std::optional<std::string> validate(const StableRibbonGraph& g) {
  const int H = g.half_edge_count();
  std::vector<int> seen(static_cast<std::size_t>(H), 0);
  for (const auto& e : g.edges) {
    for (int h : e) {
      if (h < 0 || h >= H) return "(1) half-edge " + std::to_string(h) + " out of range";
      if (seen[static_cast<std::size_t>(h)]++) return "(1) half-edge " + std::to_string(h) + " paired twice";
    }
    if (e[0] == e[1]) return "(1) sigma1 has a fixed point at " + std::to_string(e[0]);
  }
  std::vector<int> in_cycle(static_cast<std::size_t>(H), 0);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    if (vx.genus < 0 || vx.boundary < 0) return "(4) negative defect at vertex " + std::to_string(v);
    if (vx.cycles.empty()) return "vertex " + std::to_string(v) + " has no half-edges";
    for (const auto& c : vx.cycles) {
      if (c.empty()) return "(3) empty cycle at vertex " + std::to_string(v);
      for (int h : c) {
        if (h < 0 || h >= H) return "(2) half-edge " + std::to_string(h) + " out of range";
        if (in_cycle[static_cast<std::size_t>(h)]++) return "(2) half-edge " + std::to_string(h) + " in two cycles";
      }
    }
    if (vx.cycles.size() == 1 && vx.genus == 0 && vx.boundary == 0 && vx.valency() < 3)
      return "(4) vertex " + std::to_string(v) + " is not stable (single cycle, no defects, valency " +
             std::to_string(vx.valency()) + ")";
  }
  for (int h = 0; h < H; ++h)
    if (!in_cycle[static_cast<std::size_t>(h)]) return "(2) half-edge " + std::to_string(h) + " lies in no cycle";
  return std::nullopt;
}

void require_valid(const StableRibbonGraph& g) {
  if (auto v = validate(g)) throw std::invalid_argument("invalid stable ribbon graph: " + *v);
}

HalfEdgeTables tables(const StableRibbonGraph& g) {
  const auto H = static_cast<std::size_t>(g.half_edge_count());
  HalfEdgeTables t;
  t.sigma0.assign(H, -1);
  t.sigma1.assign(H, -1);
  t.vertex.assign(H, -1);
  t.cycle.assign(H, -1);
  for (const auto& e : g.edges) {
    t.sigma1[static_cast<std::size_t>(e[0])] = e[1];
    t.sigma1[static_cast<std::size_t>(e[1])] = e[0];
  }
  int ci = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (const auto& c : g.vertices[v].cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        auto h = static_cast<std::size_t>(c[k]);
        t.sigma0[h] = c[(k + 1) % c.size()];
        t.vertex[h] = static_cast<int>(v);
        t.cycle[h] = ci;
      }
      ++ci;
    }
  }
  return t;
}

std::vector<int> sigma_infinity(const StableRibbonGraph& g) {
  auto t = tables(g);
  const std::size_t H = t.sigma0.size();
  std::vector<int> inv0(H);
  for (std::size_t h = 0; h < H; ++h) inv0[static_cast<std::size_t>(t.sigma0[h])] = static_cast<int>(h);
  std::vector<int> out(H);
  for (std::size_t h = 0; h < H; ++h) out[h] = inv0[static_cast<std::size_t>(t.sigma1[h])];
  return out;
}

std::vector<std::vector<int>> perimeters(const StableRibbonGraph& g) {
  auto s = sigma_infinity(g);
  std::vector<char> done(s.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t h = 0; h < s.size(); ++h) {
    if (done[h]) continue;
    std::vector<int> orbit;
    for (int x = static_cast<int>(h); !done[static_cast<std::size_t>(x)]; x = s[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = 1;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

// Union-find over vertices joined by edges.
std::vector<int> vertex_components(const StableRibbonGraph& g, int& count) {
  auto t = tables(g);
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : g.edges) {
    int a = find(t.vertex[static_cast<std::size_t>(e[0])]);
    int b = find(t.vertex[static_cast<std::size_t>(e[1])]);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> label(g.vertices.size(), -1);
  std::vector<int> comp(g.vertices.size());
  count = 0;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int r = find(static_cast<int>(v));
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = count++;
    comp[v] = label[static_cast<std::size_t>(r)];
  }
  return comp;
}

}  // namespace

bool is_connected(const StableRibbonGraph& g) {
  int count = 0;
  vertex_components(g, count);
  return count <= 1;
}

std::vector<StableRibbonGraph> split_components(const StableRibbonGraph& g) {
  int count = 0;
  auto comp = vertex_components(g, count);
  auto t = tables(g);
  std::vector<StableRibbonGraph> out(static_cast<std::size_t>(count));
  // relabel half-edges of each component compactly, in increasing order
  std::vector<int> newid(static_cast<std::size_t>(g.half_edge_count()), -1);
  std::vector<int> next(static_cast<std::size_t>(count), 0);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    int c = comp[static_cast<std::size_t>(t.vertex[static_cast<std::size_t>(h)])];
    newid[static_cast<std::size_t>(h)] = next[static_cast<std::size_t>(c)]++;
  }
  for (const auto& e : g.edges) {
    int c = comp[static_cast<std::size_t>(t.vertex[static_cast<std::size_t>(e[0])])];
    out[static_cast<std::size_t>(c)].edges.push_back({newid[static_cast<std::size_t>(e[0])], newid[static_cast<std::size_t>(e[1])]});
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Vertex nv = g.vertices[v];
    for (auto& cyc : nv.cycles)
      for (auto& h : cyc) h = newid[static_cast<std::size_t>(h)];
    out[static_cast<std::size_t>(comp[v])].vertices.push_back(std::move(nv));
  }
  return out;
}

GenusMarked recover_g_n(const StableRibbonGraph& g) {
  if (g.vertices.empty()) throw std::invalid_argument("recover_g_n: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("recover_g_n: graph is not connected");
  const int np = static_cast<int>(perimeters(g).size());
  int sum_g = 0, sum_n = 0;
  for (const auto& v : g.vertices) {
    sum_g += v.genus;
    sum_n += v.boundary;
  }
  const int twice = g.edge_count() + g.cycle_count() - np;
  if (twice % 2 != 0) throw std::invalid_argument("recover_g_n: non-integer genus");
  GenusMarked out;
  out.marked = np + sum_n;
  out.genus = 1 - static_cast<int>(g.vertices.size()) + twice / 2 + sum_g;
  if (out.genus < 0) throw std::invalid_argument("recover_g_n: negative genus");
  if (2 - 2 * out.genus - out.marked >= 0) throw std::invalid_argument("recover_g_n: unstable (g,n)");
  return out;
}

StableRibbonGraph disjoint_union(const StableRibbonGraph& a, const StableRibbonGraph& b) {
  StableRibbonGraph out = a;
  const int off = a.half_edge_count();
  for (auto e : b.edges) out.edges.push_back({e[0] + off, e[1] + off});
  for (auto v : b.vertices) {
    for (auto& c : v.cycles)
      for (auto& h : c) h += off;
    out.vertices.push_back(std::move(v));
  }
  return out;
}

StableRibbonGraph relabel(const StableRibbonGraph& g, const std::vector<int>& perm) {
  StableRibbonGraph out = g;
  for (auto& e : out.edges)
    for (auto& h : e) h = perm.at(static_cast<std::size_t>(h));
  for (auto& v : out.vertices)
    for (auto& c : v.cycles)
      for (auto& h : c) h = perm.at(static_cast<std::size_t>(h));
  return out;
}

StableRibbonGraph interleaved_two_loop() {
  StableRibbonGraph g;
  g.edges = {{0, 2}, {1, 3}};
  g.vertices = {Vertex{{{0, 1, 2, 3}}, 0, 0}};
  return g;
}

StableRibbonGraph theta_graph() {
  StableRibbonGraph g;
  g.edges = {{0, 3}, {1, 4}, {2, 5}};
  g.vertices = {Vertex{{{0, 1, 2}}, 0, 0}, Vertex{{{3, 5, 4}}, 0, 0}};
  return g;
}

void add_graph(GraphChain& out, const StableRibbonGraph& g, const Rational& coeff) {
  if (coeff == 0) return;
  auto cls = canonical_form(g);
  if (cls.zero) return;
  out.add(cls.code, coeff * cls.sign);
}

GraphChain chain_of(const StableRibbonGraph& g, const Rational& coeff) {
  GraphChain c;
  add_graph(c, g, coeff);
  return c;
}

// ---- text format -------------------------------------------------------------

std::string to_record(const StableRibbonGraph& g) {
  std::string s = "E=" + std::to_string(g.edge_count()) + "; sigma1=[";
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(g.edges[k][0]) + "," + std::to_string(g.edges[k][1]) + ")";
  }
  s += "]; vertices=[";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (v) s += ",";
    s += "[";
    const auto& vx = g.vertices[v];
    for (std::size_t c = 0; c < vx.cycles.size(); ++c) {
      if (c) s += ",";
      s += "cycle=[";
      for (std::size_t k = 0; k < vx.cycles[c].size(); ++k) {
        if (k) s += ",";
        s += std::to_string(vx.cycles[c][k]);
      }
      s += "]";
    }
    s += "; g=" + std::to_string(vx.genus) + "; n=" + std::to_string(vx.boundary) + "]";
  }
  s += "]; orient=[";
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(k);
  }
  return s + "]";
}

namespace {

class RecordParser {
 public:
  explicit RecordParser(std::string_view t) : text_(t) {}

  void ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void keyword(std::string_view k) {
    ws();
    if (text_.substr(pos_, k.size()) != k) fail("expected '" + std::string(k) + "'");
    pos_ += k.size();
  }
  int integer() {
    ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  std::vector<int> int_list() {
    std::vector<int> out;
    expect('[');
    if (peek(']')) {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(integer());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }
  void end() {
    ws();
    if (pos_ != text_.size()) fail("trailing text");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("graph record: " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StableRibbonGraph parse_record(std::string_view text) {
  RecordParser p(text);
  p.keyword("E");
  p.expect('=');
  const int E = p.integer();
  if (E < 0) p.fail("negative edge count");
  p.expect(';');
  p.keyword("sigma1");
  p.expect('=');
  p.expect('[');
  std::vector<std::array<int, 2>> pairs;
  if (p.peek(']')) {
    p.expect(']');
  } else {
    while (true) {
      p.expect('(');
      int a = p.integer();
      p.expect(',');
      int b = p.integer();
      p.expect(')');
      pairs.push_back({a, b});
      if (p.peek(',')) {
        p.expect(',');
        continue;
      }
      p.expect(']');
      break;
    }
  }
  if (static_cast<int>(pairs.size()) != E) p.fail("sigma1 does not have E pairs");
  p.expect(';');
  p.keyword("vertices");
  p.expect('=');
  p.expect('[');
  StableRibbonGraph g;
  if (p.peek(']')) {
    p.expect(']');
  } else {
    while (true) {
      p.expect('[');
      Vertex v;
      while (true) {
        p.keyword("cycle");
        p.expect('=');
        v.cycles.push_back(p.int_list());
        if (p.peek(',')) {
          p.expect(',');
          continue;
        }
        break;
      }
      p.expect(';');
      p.keyword("g");
      p.expect('=');
      v.genus = p.integer();
      p.expect(';');
      p.keyword("n");
      p.expect('=');
      v.boundary = p.integer();
      p.expect(']');
      g.vertices.push_back(std::move(v));
      if (p.peek(',')) {
        p.expect(',');
        continue;
      }
      p.expect(']');
      break;
    }
  }
  p.expect(';');
  p.keyword("orient");
  p.expect('=');
  auto orient = p.int_list();
  p.end();
  if (static_cast<int>(orient.size()) != E) p.fail("orient does not list E edges");
  std::vector<char> used(static_cast<std::size_t>(E), 0);
  for (int e : orient) {
    if (e < 0 || e >= E || used[static_cast<std::size_t>(e)]) p.fail("orient is not a permutation of the edges");
    used[static_cast<std::size_t>(e)] = 1;
    g.edges.push_back(pairs[static_cast<std::size_t>(e)]);
  }
  return g;
}

}  // namespace srg
