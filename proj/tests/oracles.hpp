#pragma once

// Test-side reference computations, written independently of the library's
// fast paths.

#include "srg/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using srg::StableRibbonGraph;

// sigma0, sigma1 and vertex-of tables rebuilt from scratch.
struct Tables {
  std::vector<int> s0, s1, vert;
};

inline Tables tables_of(const StableRibbonGraph& g) {
  const auto H = static_cast<std::size_t>(g.half_edge_count());
  Tables t{std::vector<int>(H), std::vector<int>(H), std::vector<int>(H)};
  for (const auto& e : g.edges) {
    t.s1[static_cast<std::size_t>(e[0])] = e[1];
    t.s1[static_cast<std::size_t>(e[1])] = e[0];
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (const auto& c : g.vertices[v].cycles)
      for (std::size_t k = 0; k < c.size(); ++k) {
        t.s0[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
        t.vert[static_cast<std::size_t>(c[k])] = static_cast<int>(v);
      }
  return t;
}

// Number of swaps to sort p, parity only.
inline int parity(std::vector<int> p) {
  int swaps = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      ++swaps;
    }
  return swaps % 2;
}

// If phi (half-edges of a -> half-edges of b) is an isomorphism, the parity of
// the induced edge permutation relative to the two edge orders.
inline std::optional<int> iso_parity(const StableRibbonGraph& a, const StableRibbonGraph& b, const std::vector<int>& phi) {
  if (a.edge_count() != b.edge_count() || a.vertices.size() != b.vertices.size()) return std::nullopt;
  const auto ta = tables_of(a), tb = tables_of(b);
  const std::size_t H = phi.size();
  for (std::size_t h = 0; h < H; ++h) {
    const int ph = phi[h];
    if (phi[static_cast<std::size_t>(ta.s0[h])] != tb.s0[static_cast<std::size_t>(ph)]) return std::nullopt;
    if (phi[static_cast<std::size_t>(ta.s1[h])] != tb.s1[static_cast<std::size_t>(ph)]) return std::nullopt;
  }
  // vertex map must be well defined, bijective, and keep defects
  std::map<int, int> vmap;
  for (std::size_t h = 0; h < H; ++h) {
    const int va = ta.vert[h], vb = tb.vert[static_cast<std::size_t>(phi[h])];
    auto [it, fresh] = vmap.emplace(va, vb);
    if (!fresh && it->second != vb) return std::nullopt;
  }
  std::vector<int> hit(b.vertices.size(), 0);
  for (const auto& [va, vb] : vmap) {
    if (hit[static_cast<std::size_t>(vb)]++) return std::nullopt;
    const auto& x = a.vertices[static_cast<std::size_t>(va)];
    const auto& y = b.vertices[static_cast<std::size_t>(vb)];
    if (x.genus != y.genus || x.boundary != y.boundary) return std::nullopt;
  }
  // edge permutation
  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t k = 0; k < b.edges.size(); ++k) {
    auto [p, q] = b.edges[k];
    edge_index[{std::min(p, q), std::max(p, q)}] = static_cast<int>(k);
  }
  std::vector<int> perm;
  for (const auto& e : a.edges) {
    const int p = phi[static_cast<std::size_t>(e[0])], q = phi[static_cast<std::size_t>(e[1])];
    perm.push_back(edge_index.at({std::min(p, q), std::max(p, q)}));
  }
  return parity(perm);
}

// Every isomorphism a -> b, as edge-permutation parities.
inline std::vector<int> all_isos(const StableRibbonGraph& a, const StableRibbonGraph& b) {
  std::vector<int> out;
  if (a.half_edge_count() != b.half_edge_count()) return out;
  std::vector<int> phi(static_cast<std::size_t>(a.half_edge_count()));
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (auto p = iso_parity(a, b, phi)) out.push_back(*p);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

}  // namespace oracle
