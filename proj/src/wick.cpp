#include "srg/wick.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace srg {

std::vector<ChordDiagram> chord_diagrams(int k) {
  if (k < 1) throw std::invalid_argument("chord_diagrams: k must be at least 1");
  const int n = 2 * k;
  std::vector<ChordDiagram> out;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  ChordDiagram cur;
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int s = 0; s < n; ++s)
      if (!used[static_cast<std::size_t>(s)]) {
        first = s;
        break;
      }
    if (first < 0) {
      out.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(first)] = 1;
    for (int t = first + 1; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = 1;
      cur.pairs.push_back({first, t});
      rec();
      cur.pairs.pop_back();
      used[static_cast<std::size_t>(t)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
  };
  rec();
  return out;
}

int koszul_sign(std::span<const int> parity, std::span<const int> order) {
  int s = 1;
  for (std::size_t a = 0; a < order.size(); ++a) {
    if (!parity[static_cast<std::size_t>(order[a])]) continue;
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (parity[static_cast<std::size_t>(order[b])] && order[b] < order[a]) s = -s;
  }
  return s;
}

namespace {

std::vector<int> slot_parities(std::span<const Letter> slots) {
  std::vector<int> p;
  p.reserve(slots.size());
  for (auto l : slots) p.push_back(l.parity());
  return p;
}

Rational omega_of_pairs(const std::vector<std::array<int, 2>>& pairs, std::span<const Letter> slots,
                        const std::vector<int>& par) {
  Rational w = 1;
  std::vector<int> order;
  order.reserve(slots.size());
  for (const auto& [i, j] : pairs) {
    w *= pairing(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]);
    if (w == 0) return 0;
    order.push_back(i);
    order.push_back(j);
  }
  return w * koszul_sign(par, order);
}

}  // namespace

Rational omega_c(const ChordDiagram& c, std::span<const Letter> slots) {
  if (slots.size() != 2 * c.pairs.size()) throw std::invalid_argument("omega_c: slot count does not match diagram");
  return omega_of_pairs(c.pairs, slots, slot_parities(slots));
}

int DecoratedTensor::slot_count() const {
  int n = 0;
  for (const auto& v : vertices) n += v.total_length();
  return n;
}

int DecoratedTensor::parity() const {
  int p = 0;
  for (const auto& v : vertices) p ^= v.parity();
  return p;
}

std::vector<Letter> DecoratedTensor::slots() const {
  std::vector<Letter> out;
  for (const auto& v : vertices)
    for (const auto& f : v.factors) out.insert(out.end(), f.letters().begin(), f.letters().end());
  return out;
}

GraphChain wick_map(const DecoratedTensor& x, const Rational& coeff) {
  GraphChain out;
  const auto slots = x.slots();
  const int n = static_cast<int>(slots.size());
  if (n % 2 != 0 || coeff == 0) return out;
  // scaffold: half-edge = slot index
  StableRibbonGraph scaffold;
  int next = 0;
  for (const auto& v : x.vertices) {
    Vertex vx;
    vx.genus = v.gamma;
    vx.boundary = v.nu;
    for (const auto& f : v.factors) {
      Cycle c(f.size());
      std::iota(c.begin(), c.end(), next);
      next += static_cast<int>(f.size());
      vx.cycles.push_back(std::move(c));
    }
    scaffold.vertices.push_back(std::move(vx));
  }
  for (const auto& v : scaffold.vertices)
    if (v.cycles.empty()) return out;
  const auto par = slot_parities(slots);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::array<int, 2>> pairs;
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int s = 0; s < n; ++s)
      if (!used[static_cast<std::size_t>(s)]) {
        first = s;
        break;
      }
    if (first < 0) {
      StableRibbonGraph g = scaffold;
      g.edges = pairs;
      if (validate(g)) return;  // unstable scaffold
      add_graph(out, g, coeff * omega_of_pairs(pairs, slots, par));
      return;
    }
    used[static_cast<std::size_t>(first)] = 1;
    for (int t = first + 1; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] || !pairing(slots[static_cast<std::size_t>(first)], slots[static_cast<std::size_t>(t)]))
        continue;
      used[static_cast<std::size_t>(t)] = 1;
      pairs.push_back({first, t});
      rec();
      pairs.pop_back();
      used[static_cast<std::size_t>(t)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
  };
  rec();
  return out;
}

GraphChain wick_map(const TensorChain& x, Execution ex) {
  std::vector<std::pair<DecoratedTensor, Rational>> items(x.begin(), x.end());
  return map_reduce(
      items, [](const std::pair<DecoratedTensor, Rational>& it) { return wick_map(it.first, it.second); },
      GraphChain{}, [](GraphChain& acc, GraphChain part) { acc += part; }, ex);
}

TensorChain x_gamma(const StableRibbonGraph& g) {
  require_valid(g);
  const int E = g.edge_count();
  if (E > 255) throw std::invalid_argument("x_gamma: too many edges");
  std::vector<Letter> letter_of(static_cast<std::size_t>(g.half_edge_count()));
  for (int k = 0; k < E; ++k) {
    letter_of[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(k)][0])] = Letter::x(static_cast<std::uint8_t>(k + 1));
    letter_of[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(k)][1])] = Letter::xi(static_cast<std::uint8_t>(k + 1));
  }
  DecoratedTensor x;
  Rational sign = 1;
  for (const auto& v : g.vertices) {
    std::vector<CyclicWord> factors;
    for (const auto& c : v.cycles) {
      LetterString w;
      for (int h : c) w.push_back(letter_of[static_cast<std::size_t>(h)]);
      auto nw = normalize_word(w);
      if (nw.is_zero()) return {};
      sign *= nw.sign;
      factors.push_back(nw.word);
    }
    auto nt = normalize_term(v.genus, v.boundary, std::move(factors));
    if (nt.is_zero()) return {};
    sign *= nt.sign;
    x.vertices.push_back(std::move(nt.term));
  }
  // fix the overall scale against I(x) itself
  const auto image = wick_map(x, 1);
  const auto target = chain_of(g);
  TensorChain out;
  if (target.is_zero()) return out;
  if (image.size() != 1 || image.begin()->first != target.begin()->first)
    throw std::logic_error("x_gamma: Wick image is not a single graph");
  out.add(x, target.begin()->second / image.begin()->second);
  return out;
}

TensorChain multiply(const TensorChain& a, const TensorChain& b) {
  TensorChain out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      DecoratedTensor z = x;
      z.vertices.insert(z.vertices.end(), y.vertices.begin(), y.vertices.end());
      out.add(z, cx * cy);
    }
  return out;
}

DecoratedTensor shift_indices(const DecoratedTensor& x, int shift) {
  DecoratedTensor out;
  for (const auto& v : x.vertices) {
    std::vector<CyclicWord> fs;
    for (const auto& f : v.factors) {
      LetterString w = f.letters();
      for (auto& l : w) l.index = static_cast<std::uint8_t>(l.index + shift);
      auto nw = normalize_word(w);  // shifting keeps the letter order, so this is the same rotation
      fs.push_back(nw.word);
    }
    out.vertices.push_back(CETerm{v.gamma, v.nu, std::move(fs)});
  }
  return out;
}

namespace {

int prefix_parity(const std::vector<CETerm>& vs, std::size_t end) {
  int p = 0;
  for (std::size_t k = 0; k < end; ++k) p ^= vs[k].parity();
  return p;
}

TensorChain outer_term(const DecoratedTensor& x, const Rational& c) {
  TensorChain out;
  const auto& vs = x.vertices;
  // internal differential, vertex by vertex
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Rational s = c * sign_of_parity(prefix_parity(vs, i));
    for (const auto& [t, q] : deformed_differential_raw(CEChain(vs[i], 1))) {
      DecoratedTensor y = x;
      y.vertices[i] = t;
      out.add(y, s * q);
    }
  }
  // brackets between pairs of vertices, result in front
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const int pi = vs[i].parity(), pj = vs[j].parity();
      const int p = pi * prefix_parity(vs, i) + pj * prefix_parity(vs, j) + pi * pj;
      for (const auto& [t, q] : extended_bracket(CEChain(vs[i], 1), CEChain(vs[j], 1))) {
        DecoratedTensor y;
        y.vertices.push_back(t);
        for (std::size_t k = 0; k < vs.size(); ++k)
          if (k != i && k != j) y.vertices.push_back(vs[k]);
        out.add(y, c * q * sign_of_parity(p));
      }
    }
  return out;
}

}  // namespace

TensorChain outer_differential(const TensorChain& x, Execution ex) {
  std::vector<std::pair<DecoratedTensor, Rational>> items(x.begin(), x.end());
  return map_reduce(
      items, [](const std::pair<DecoratedTensor, Rational>& it) { return outer_term(it.first, it.second); },
      TensorChain{}, [](TensorChain& acc, TensorChain part) { acc += part; }, ex);
}

TensorChain restrict_column(const TensorChain& x, WickColumn col) {
  if (col == WickColumn::full) return x;
  TensorChain out;
  for (const auto& [t, q] : x) {
    bool keep = true;
    for (const auto& v : t.vertices) {
      if (v.nu != 0) keep = false;
      if (col == WickColumn::rgc && (v.gamma != 0 || v.factors.size() != 1)) keep = false;
    }
    if (keep) out.add(t, q);
  }
  return out;
}

}  // namespace srg
