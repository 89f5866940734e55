#include "srg/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace srg {

namespace {

std::vector<std::vector<int>> integer_partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

// sigma1 tables of all fixed-point-free involutions on 0..H-1.
std::vector<std::vector<int>> perfect_matchings(int H) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(H), -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int h = 0; h < H; ++h)
      if (s[static_cast<std::size_t>(h)] < 0) {
        first = h;
        break;
      }
    if (first < 0) {
      out.push_back(s);
      return;
    }
    for (int k = first + 1; k < H; ++k) {
      if (s[static_cast<std::size_t>(k)] >= 0) continue;
      s[static_cast<std::size_t>(first)] = k;
      s[static_cast<std::size_t>(k)] = first;
      rec();
      s[static_cast<std::size_t>(first)] = s[static_cast<std::size_t>(k)] = -1;
    }
  };
  rec();
  return out;
}

// Restricted growth strings: block[i] <= 1 + max(block[0..i)).
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      f(block, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    f(block, 0);
    return;
  }
  rec(0, 0);
}

// Nonnegative vectors of length n with sum exactly `total` (or at most, when `at_most`).
void for_each_distribution(int n, int total, bool at_most, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      if (at_most) {
        for (int x = 0; x <= left; ++x) {
          v[static_cast<std::size_t>(i)] = x;
          f(v);
        }
      } else {
        v[static_cast<std::size_t>(i)] = left;
        f(v);
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) {
    if (total == 0 || at_most) f(v);
    return;
  }
  rec(0, total);
}

struct CycleStructure {
  std::vector<Cycle> cycles;
  std::vector<int> cycle_of;
};

CycleStructure cycles_of(const std::vector<int>& sigma0) {
  CycleStructure cs;
  cs.cycle_of.assign(sigma0.size(), -1);
  for (std::size_t h = 0; h < sigma0.size(); ++h) {
    if (cs.cycle_of[h] >= 0) continue;
    Cycle c;
    for (int x = static_cast<int>(h); cs.cycle_of[static_cast<std::size_t>(x)] < 0; x = sigma0[static_cast<std::size_t>(x)]) {
      cs.cycle_of[static_cast<std::size_t>(x)] = static_cast<int>(cs.cycles.size());
      c.push_back(x);
    }
    cs.cycles.push_back(std::move(c));
  }
  return cs;
}

int count_orbits_sigma_inf(const std::vector<int>& sigma0, const std::vector<int>& sigma1) {
  const std::size_t H = sigma0.size();
  std::vector<int> inv0(H);
  for (std::size_t h = 0; h < H; ++h) inv0[static_cast<std::size_t>(sigma0[h])] = static_cast<int>(h);
  std::vector<char> seen(H, 0);
  int orbits = 0;
  for (std::size_t h = 0; h < H; ++h) {
    if (seen[h]) continue;
    ++orbits;
    for (int x = static_cast<int>(h); !seen[static_cast<std::size_t>(x)];
         x = inv0[static_cast<std::size_t>(sigma1[static_cast<std::size_t>(x)])])
      seen[static_cast<std::size_t>(x)] = 1;
  }
  return orbits;
}

// Number of connected pieces when cycles are joined by edges and by shared vertices.
int piece_count(const CycleStructure& cs, const std::vector<int>& sigma1, const std::vector<int>& block, int blocks) {
  const int C = static_cast<int>(cs.cycles.size());
  std::vector<int> parent(static_cast<std::size_t>(C + blocks));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int c = 0; c < C; ++c) unite(c, C + block[static_cast<std::size_t>(c)]);
  for (std::size_t h = 0; h < sigma1.size(); ++h)
    unite(cs.cycle_of[h], cs.cycle_of[static_cast<std::size_t>(sigma1[h])]);
  std::set<int> roots;
  for (int c = 0; c < C; ++c) roots.insert(find(c));
  return static_cast<int>(roots.size());
}

StableRibbonGraph assemble(const CycleStructure& cs, const std::vector<int>& sigma1, const std::vector<int>& block,
                           int blocks, const std::vector<int>& genus, const std::vector<int>& boundary) {
  StableRibbonGraph g;
  for (std::size_t h = 0; h < sigma1.size(); ++h)
    if (static_cast<int>(h) < sigma1[h]) g.edges.push_back({static_cast<int>(h), sigma1[h]});
  g.vertices.resize(static_cast<std::size_t>(blocks));
  for (std::size_t c = 0; c < cs.cycles.size(); ++c) g.vertices[static_cast<std::size_t>(block[c])].cycles.push_back(cs.cycles[c]);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    g.vertices[v].genus = genus[v];
    g.vertices[v].boundary = boundary[v];
  }
  return g;
}

bool stable_vertices(const StableRibbonGraph& g) {
  for (const auto& v : g.vertices)
    if (v.cycles.size() == 1 && v.genus == 0 && v.boundary == 0 && v.valency() < 3) return false;
  return true;
}

bool membership_allows(ComplexKind k, const std::vector<int>& block, int blocks, int N_total, int G_total) {
  if (k == ComplexKind::srgc) return true;
  if (N_total != 0) return false;
  if (k == ComplexKind::rgc) return G_total == 0 && static_cast<int>(block.size()) == blocks;
  return true;
}

// Connected generators of one type with E edges.
std::vector<GraphCode> connected_of_type(int E, GenusMarked gn, ComplexKind complex, bool keep_zero, Execution ex) {
  const int H = 2 * E;
  struct Item {
    std::vector<int> parts;
    const std::vector<int>* sigma1;
  };
  const auto matchings = perfect_matchings(H);
  std::vector<Item> items;
  for (const auto& parts : integer_partitions(H))
    for (const auto& m : matchings) items.push_back(Item{parts, &m});

  auto work = [&](const Item& it) {
    std::vector<GraphCode> found;
    std::vector<int> sigma0(static_cast<std::size_t>(H));
    int start = 0;
    for (int p : it.parts) {
      for (int k = 0; k < p; ++k) sigma0[static_cast<std::size_t>(start + k)] = start + (k + 1) % p;
      start += p;
    }
    const auto& sigma1 = *it.sigma1;
    const int np = count_orbits_sigma_inf(sigma0, sigma1);
    const int N = gn.marked - np;
    if (N < 0) return found;
    auto cs = cycles_of(sigma0);
    const int C = static_cast<int>(cs.cycles.size());
    const int twice = E + C - np;
    if (twice % 2 != 0) return found;
    for_each_set_partition(C, [&](const std::vector<int>& block, int V) {
      const int g0 = 1 - V + twice / 2;
      const int G = gn.genus - g0;
      if (G < 0) return;
      if (!membership_allows(complex, block, V, N, G)) return;
      if (piece_count(cs, sigma1, block, V) != 1) return;
      for_each_distribution(V, G, false, [&](const std::vector<int>& gv) {
        for_each_distribution(V, N, false, [&](const std::vector<int>& nv) {
          auto g = assemble(cs, sigma1, block, V, gv, nv);
          if (!stable_vertices(g)) return;
          auto cls = canonical_form(g);
          if (keep_zero || !cls.zero) found.push_back(std::move(cls.code));
        });
      });
    });
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  };
  auto parts = map_items(items, work, ex);
  std::set<GraphCode> all;
  for (auto& p : parts) all.insert(p.begin(), p.end());
  return {all.begin(), all.end()};
}

struct TypedCode {
  GraphCode code;
  int edges = 0;
  GenusMarked type;
};

}  // namespace

std::vector<GenusMarked> stable_types(int euler_bound) {
  std::vector<GenusMarked> out;
  for (int g = 0; 2 * g - 1 <= euler_bound; ++g)
    for (int n = 1; 2 * g - 2 + n <= euler_bound; ++n)
      if (2 * g - 2 + n >= 1) out.push_back(GenusMarked{g, n});
  return out;
}

int max_edges_for(GenusMarked gn) { return 6 * gn.genus - 6 + 3 * gn.marked; }

std::vector<GenusMarked> component_types(const StableRibbonGraph& g) {
  std::vector<GenusMarked> out;
  for (const auto& c : split_components(g)) out.push_back(recover_g_n(c));
  return out;
}

std::vector<GraphCode> enumerate(const EnumerationOptions& opt) {
  if (opt.edges < 1) throw std::invalid_argument("enumerate: edge count must be at least 1");
  std::vector<GenusMarked> types = opt.filter ? std::vector<GenusMarked>{*opt.filter} : stable_types(opt.euler_bound);
  std::set<GraphCode> out;
  // connected pieces by edge count
  std::vector<std::vector<TypedCode>> pieces(static_cast<std::size_t>(opt.edges + 1));
  const int lowest = opt.connected ? opt.edges : 1;
  for (int e = lowest; e <= opt.edges; ++e)
    for (auto t : types)
      for (auto& c : connected_of_type(e, t, opt.complex, opt.include_zero, opt.execution))
        pieces[static_cast<std::size_t>(e)].push_back(TypedCode{std::move(c), e, t});
  for (const auto& tc : pieces[static_cast<std::size_t>(opt.edges)]) out.insert(tc.code);
  if (!opt.connected) {
    std::vector<const TypedCode*> flat;
    for (const auto& level : pieces)
      for (const auto& tc : level) flat.push_back(&tc);
    std::vector<const TypedCode*> chosen;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int edges_left, int euler) {
      if (edges_left == 0) {
        if (chosen.size() < 2) return;
        StableRibbonGraph u;
        for (const auto* tc : chosen) u = disjoint_union(u, decode(tc->code));
        auto cls = canonical_form(u);
        if (opt.include_zero || !cls.zero) out.insert(cls.code);
        return;
      }
      for (std::size_t k = from; k < flat.size(); ++k) {
        const auto* tc = flat[k];
        if (tc->edges > edges_left) continue;
        const int chi = 2 * tc->type.genus - 2 + tc->type.marked;
        if (!opt.filter && euler + chi > opt.euler_bound) continue;
        chosen.push_back(tc);
        rec(k, edges_left - tc->edges, euler + chi);
        chosen.pop_back();
      }
    };
    rec(0, opt.edges, 0);
  }
  return {out.begin(), out.end()};
}

std::vector<GraphCode> enumerate_naive(const EnumerationOptions& opt) {
  if (opt.edges < 1) throw std::invalid_argument("enumerate_naive: edge count must be at least 1");
  const int E = opt.edges, H = 2 * E;
  const std::vector<GenusMarked> types = opt.filter ? std::vector<GenusMarked>{*opt.filter} : stable_types(opt.euler_bound);
  std::set<GraphCode> out;
  std::vector<int> perm(static_cast<std::size_t>(H));
  for (const auto& sigma1 : perfect_matchings(H)) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      auto cs = cycles_of(perm);
      const int C = static_cast<int>(cs.cycles.size());
      for_each_set_partition(C, [&](const std::vector<int>& block, int V) {
        // components of the assembled structure, with their raw counts
        auto bare = assemble(cs, sigma1, block, V, std::vector<int>(static_cast<std::size_t>(V), 0),
                             std::vector<int>(static_cast<std::size_t>(V), 0));
        auto comps = split_components(bare);
        if (opt.connected && comps.size() != 1) return;
        const auto tab = tables(bare);
        // component of each vertex, by flood fill over edges
        std::vector<int> comp_of(static_cast<std::size_t>(V), -1);
        int ncomp = 0;
        for (int v0 = 0; v0 < V; ++v0) {
          if (comp_of[static_cast<std::size_t>(v0)] >= 0) continue;
          std::vector<int> stack{v0};
          comp_of[static_cast<std::size_t>(v0)] = ncomp;
          while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h = 0; h < H; ++h) {
              if (tab.vertex[static_cast<std::size_t>(h)] != v) continue;
              int w = tab.vertex[static_cast<std::size_t>(tab.sigma1[static_cast<std::size_t>(h)])];
              if (comp_of[static_cast<std::size_t>(w)] < 0) {
                comp_of[static_cast<std::size_t>(w)] = ncomp;
                stack.push_back(w);
              }
            }
          }
          ++ncomp;
        }
        std::vector<int> Ec(static_cast<std::size_t>(ncomp), 0), Cc(static_cast<std::size_t>(ncomp), 0),
            Vc(static_cast<std::size_t>(ncomp), 0), Pc(static_cast<std::size_t>(ncomp), 0);
        for (int v = 0; v < V; ++v) {
          ++Vc[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])];
          Cc[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])] +=
              static_cast<int>(bare.vertices[static_cast<std::size_t>(v)].cycles.size());
        }
        for (const auto& ed : bare.edges) ++Ec[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(tab.vertex[static_cast<std::size_t>(ed[0])])])];
        for (const auto& p : perimeters(bare))
          ++Pc[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(tab.vertex[static_cast<std::size_t>(p[0])])])];
        std::vector<int> g0(static_cast<std::size_t>(ncomp));
        for (int c = 0; c < ncomp; ++c) {
          const int twice = Ec[static_cast<std::size_t>(c)] + Cc[static_cast<std::size_t>(c)] - Pc[static_cast<std::size_t>(c)];
          if (twice % 2 != 0) return;
          g0[static_cast<std::size_t>(c)] = 1 - Vc[static_cast<std::size_t>(c)] + twice / 2;
        }
        // choose a type per component, then spread the defects over its vertices
        std::vector<int> gv(static_cast<std::size_t>(V), 0), nv(static_cast<std::size_t>(V), 0);
        std::function<void(int, int)> pick = [&](int c, int euler) {
          if (c == ncomp) {
            if (!opt.filter && ncomp > 1 && euler > opt.euler_bound) return;
            auto g = assemble(cs, sigma1, block, V, gv, nv);
            if (!stable_vertices(g) || !in_complex(g, opt.complex)) return;
            auto cls = canonical_form(g);
            if (opt.include_zero || !cls.zero) out.insert(cls.code);
            return;
          }
          std::vector<int> mine;
          for (int v = 0; v < V; ++v)
            if (comp_of[static_cast<std::size_t>(v)] == c) mine.push_back(v);
          for (auto t : types) {
            const int G = t.genus - g0[static_cast<std::size_t>(c)];
            const int N = t.marked - Pc[static_cast<std::size_t>(c)];
            if (G < 0 || N < 0) continue;
            const int n_mine = static_cast<int>(mine.size());
            for_each_distribution(n_mine, G, false, [&](const std::vector<int>& dg) {
              for_each_distribution(n_mine, N, false, [&](const std::vector<int>& dn) {
                for (int k = 0; k < n_mine; ++k) {
                  gv[static_cast<std::size_t>(mine[static_cast<std::size_t>(k)])] = dg[static_cast<std::size_t>(k)];
                  nv[static_cast<std::size_t>(mine[static_cast<std::size_t>(k)])] = dn[static_cast<std::size_t>(k)];
                }
                pick(c + 1, euler + 2 * t.genus - 2 + t.marked);
              });
            });
          }
        };
        pick(0, 0);
      });
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace srg
