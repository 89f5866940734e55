#include "srg/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace srg {

long VerifyReport::checked() const {
  long n = 0;
  for (const auto& g : groups) n += g.checked;
  return n;
}

long VerifyReport::failed() const {
  long n = 0;
  for (const auto& g : groups) n += g.failed;
  return n;
}

void VerifyReport::record(const std::string& group, bool ok, const std::function<std::string()>& describe) {
  auto it = std::find_if(groups.begin(), groups.end(), [&](const CheckGroup& g) { return g.name == group; });
  if (it == groups.end()) {
    groups.push_back(CheckGroup{group, 0, 0});
    it = groups.end() - 1;
  }
  ++it->checked;
  if (ok) return;
  ++it->failed;
  if (!first_failure) first_failure = group + ": " + (describe ? describe() : std::string("failed"));
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& g : other.groups) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const CheckGroup& x) { return x.name == g.name; });
    if (it == groups.end()) {
      groups.push_back(g);
    } else {
      it->checked += g.checked;
      it->failed += g.failed;
    }
  }
  generators.insert(generators.end(), other.generators.begin(), other.generators.end());
  if (!first_failure && other.first_failure) first_failure = other.first_failure;
}

namespace {

const ComplexKind kComplexes[] = {ComplexKind::srgc, ComplexKind::krgc, ComplexKind::rgc};

std::vector<GraphCode> generators(int edges, ComplexKind k, const VerifyOptions& o, bool include_zero = false,
                                  bool connected = false) {
  EnumerationOptions opt;
  opt.edges = edges;
  opt.complex = k;
  opt.connected = connected;
  opt.euler_bound = o.euler_bound;
  opt.include_zero = include_zero;
  opt.execution = o.execution;
  return enumerate(opt);
}

std::string first_term(const GraphChain& c) {
  if (c.is_zero()) return "0";
  const auto& [code, q] = *c.begin();
  return to_string(q) + " * " + code_hash(code);
}

// Per-item results gathered in parallel, recorded in order.
struct ItemResult {
  std::vector<std::pair<std::string, bool>> checks;
  std::string detail;
};

void record_items(VerifyReport& r, const std::vector<ItemResult>& items, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < items.size(); ++i)
    for (const auto& [group, ok] : items[i].checks)
      r.record(group, ok, [&] { return labels[i] + " " + items[i].detail; });
}

WordCombination bracket(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(bracket_words(x, y), cx * cy);
  return out;
}

int hpar(const WordCombination& a) { return a.is_zero() ? 0 : a.begin()->first.parity(); }
int spar(const CyclicWord& w) { return (w.parity() + 1) % 2; }

// shifted bracket [Pa, Pb] = (-1)^{|a|} P{a,b}
WordCombination sb(const WordCombination& a, const WordCombination& b) {
  return Rational(sign_of_parity(hpar(a))) * bracket(a, b);
}

WordCombination sbw(const CyclicWord& y, const CyclicWord& z) {
  return Rational(sign_of_parity(y.parity())) * bracket_words(y, z);
}

// (P (x) P) Delta
TensorSquareElement cobr_shifted(const CyclicWord& a) {
  TensorSquareElement out;
  for (const auto& [yz, c] : cobracket_word(a)) out.add(yz, c * sign_of_parity(yz.first.parity()));
  return out;
}

using Triple = std::array<CyclicWord, 3>;

}  // namespace

VerifyReport verify_d2(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "d2";
  for (auto k : kComplexes)
    for (int e = 1; e <= o.max_edges; ++e) {
      auto gens = generators(e, k, o);
      auto res = map_items(
          gens,
          [&](const GraphCode& code) {
            ItemResult it;
            auto d = differential(chain_of(decode(code)), k);
            auto dd = differential(d, k);
            it.checks.push_back({std::string("d^2 = 0 (") + to_string(k) + ")", dd.is_zero()});
            it.detail = "d^2 has " + first_term(dd);
            return it;
          },
          o.execution);
      std::vector<std::string> labels;
      for (const auto& c : gens) labels.push_back(code_hash(c));
      record_items(r, res, labels);
    }
  // raw graphs: boundary of a zero-flagged graph is zero
  for (int e = 1; e <= o.max_edges; ++e)
    for (const auto& code : generators(e, ComplexKind::srgc, o, true)) {
      auto g = decode(code);
      if (!canonical_form(g).zero) continue;
      auto d = boundary(g);
      r.record("boundary of zero-flagged graph vanishes", d.is_zero(), [&] { return code_hash(code) + " -> " + first_term(d); });
    }
  return r;
}

VerifyReport verify_contraction_types(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "contraction";
  for (int e = 1; e <= o.max_edges; ++e)
    for (const auto& code : generators(e, ComplexKind::srgc, o, true)) {
      auto g = decode(code);
      auto before = component_types(g);
      std::sort(before.begin(), before.end());
      for (int k = 0; k < g.edge_count(); ++k) {
        auto out = contract_edge(g, k);
        if (!out.contractible()) continue;
        const auto& h = *out.graph;
        const bool valid = !validate(h).has_value();
        r.record("contraction result is valid", valid, [&] { return code_hash(code) + " edge " + std::to_string(k); });
        r.record("contraction removes one edge", h.edge_count() == g.edge_count() - 1,
                 [&] { return code_hash(code) + " edge " + std::to_string(k); });
        if (!valid) continue;
        auto after = component_types(h);
        std::sort(after.begin(), after.end());
        r.record("(g,n) preserved", after == before, [&] { return code_hash(code) + " edge " + std::to_string(k); });
      }
    }
  return r;
}

VerifyReport verify_projections(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "projections";
  for (int e = 1; e <= o.max_edges; ++e)
    for (const auto& code : generators(e, ComplexKind::srgc, o)) {
      auto c = chain_of(decode(code));
      auto d = boundary(c);
      for (auto k : {ComplexKind::krgc, ComplexKind::rgc}) {
        auto lhs = project(d, k);
        auto rhs = differential(project(c, k), k);
        r.record(std::string("project_") + to_string(k) + " is a chain map", lhs == rhs,
                 [&] { return code_hash(code) + " difference " + first_term(lhs - rhs); });
      }
      // KRGC -> RGC composed
      auto lhs = project(differential(project(c, ComplexKind::krgc), ComplexKind::krgc), ComplexKind::rgc);
      auto rhs = differential(project(c, ComplexKind::rgc), ComplexKind::rgc);
      r.record("krgc -> rgc is a chain map", lhs == rhs, [&] { return code_hash(code); });
    }
  return r;
}

VerifyReport verify_bialgebra(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "bialgebra";
  const auto w3 = all_words(o.space, 3);
  // odd Jacobi in shifted parity
  for (const auto& a : w3) {
    auto results = map_items(
        w3,
        [&](const CyclicWord& b) {
          std::vector<std::pair<CyclicWord, bool>> out;
          WordCombination A(a, 1), B(b, 1);
          const int u = spar(a), v = spar(b);
          auto ab = sb(A, B);
          for (const auto& c : w3) {
            WordCombination Cc(c, 1);
            auto lhs = sb(A, sb(B, Cc));
            auto rhs = sb(ab, Cc) + Rational(sign_of_parity(u * v)) * sb(B, sb(A, Cc));
            out.push_back({c, lhs == rhs});
          }
          return out;
        },
        o.execution);
    for (std::size_t i = 0; i < w3.size(); ++i)
      for (const auto& [c, ok] : results[i])
        r.record("odd Jacobi", ok, [&] { return to_string(a) + ", " + to_string(w3[i]) + ", " + to_string(c); });
  }
  const auto w4 = all_words(o.space, 4);
  for (const auto& a : w4) {
    // involutivity: bracket o cobracket = 0
    WordCombination inv;
    for (const auto& [yz, c] : cobr_shifted(a)) inv.add(sbw(yz.first, yz.second), c);
    r.record("involutivity", inv.is_zero(), [&] { return to_string(a); });
    // coJacobi: (1 + tau + tau^2)(Delta (x) 1)Delta = 0
    std::map<Triple, Rational> t;
    for (const auto& [yz, c] : cobr_shifted(a))
      for (const auto& [y12, c2] : cobr_shifted(yz.first)) {
        Triple k{y12.first, y12.second, yz.second};
        int sg = 1;
        for (int rot = 0; rot < 3; ++rot) {
          t[k] += c * c2 * sg;
          // (p q r) -> (r p q)
          sg *= sign_of_parity(spar(k[2]) * (spar(k[0]) + spar(k[1])));
          k = Triple{k[2], k[0], k[1]};
        }
      }
    bool zero = std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second == 0; });
    r.record("coJacobi", zero, [&] { return to_string(a); });
  }
  // compatibility (cocycle condition)
  auto act = [](const CyclicWord& x, const TensorSquareElement& T) {
    TensorSquareElement out;
    for (const auto& [yz, c] : T) {
      for (const auto& [w, cw] : sbw(x, yz.first)) out.add(WordPair{w, yz.second}, c * cw);
      for (const auto& [w, cw] : sbw(x, yz.second))
        out.add(WordPair{yz.first, w}, c * cw * sign_of_parity(spar(x) * spar(yz.first)));
    }
    return out;
  };
  const auto w5 = all_words(o.space, 5);
  for (const auto& a : w5)
    for (const auto& b : w5) {
      if (a.size() + b.size() > 5) continue;
      const int u = spar(a), v = spar(b);
      TensorSquareElement lhs;
      for (const auto& [w, c] : sbw(a, b)) lhs.add(cobr_shifted(w), c);
      auto rhs = act(a, cobr_shifted(b)) - Rational(sign_of_parity(u * v)) * act(b, cobr_shifted(a));
      r.record("compatibility", lhs == rhs, [&] { return to_string(a) + ", " + to_string(b); });
    }
  return r;
}

VerifyReport verify_divergence(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "divergence";
  std::vector<VectorField> fields;
  for (auto z : o.space.letters())
    for (const auto& w : all_strings(o.space, 2)) fields.push_back(VectorField::monomial(o.space, z, w));
  for (const auto& f : fields)
    for (const auto& g : fields) {
      const int fp = f.terms.begin()->first.parity();
      const int gp = g.terms.begin()->first.parity();
      auto lhs = divergence(commutator(f, g));
      auto rhs = lie_derivative(f, divergence(g)) - Rational(sign_of_parity(fp * gp)) * lie_derivative(g, divergence(f));
      r.record("div of commutator", lhs == rhs);
    }
  for (const auto& a : all_words(o.space, 5)) {
    HamiltonianElement A(o.space, WordCombination(a, 1));
    r.record("cobracket = div(alpha)/2", cobracket(A) == Rational(1, 2) * divergence(hamiltonian_field(A)),
             [&] { return to_string(a); });
  }
  return r;
}

VerifyReport verify_bracket_oracle(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "bracket-oracle";
  const auto ws = all_words(o.space, 4);
  for (const auto& a : ws) {
    HamiltonianElement A(o.space, WordCombination(a, 1));
    auto field = hamiltonian_field(A);
    auto ok = map_items(
        ws,
        [&](const CyclicWord& b) {
          HamiltonianElement B(o.space, WordCombination(b, 1));
          return bracket(A, B) == lie_derivative(field, B);
        },
        o.execution);
    for (std::size_t i = 0; i < ws.size(); ++i)
      r.record("bracket = L_alpha", ok[i], [&] { return to_string(a) + ", " + to_string(ws[i]); });
  }
  return r;
}

VerifyReport verify_lambda(const VerifyOptions& o, int max_factors, int max_length) {
  VerifyReport r;
  r.suite = "lambda";
  const auto span = lambda_spanning_set(o.space, max_factors, max_length);
  auto d2 = map_items(
      span,
      [](const CETerm& t) {
        CEChain c(t, 1);
        auto d = deformed_differential(c);
        return std::array<bool, 3>{deformed_differential_raw(deformed_differential_raw(c)).is_zero(),
                                   !lambda_violation(d).has_value(), deformed_differential(d).is_zero()};
      },
      o.execution);
  for (std::size_t i = 0; i < span.size(); ++i) {
    r.record("D^2 = 0", d2[i][0], [&] { return to_string(span[i]); });
    r.record("D preserves Lambda", d2[i][1], [&] { return to_string(span[i]); });
    r.record("D^2 = 0 on Lambda'", d2[i][2], [&] { return to_string(span[i]); });
  }
  // BV axioms on products within the same bounds
  auto fits = [&](const std::vector<const CETerm*>& ts) {
    std::size_t f = 0;
    int len = 0;
    for (auto* t : ts) {
      f += t->factors.size();
      len += t->total_length();
    }
    return static_cast<int>(f) <= max_factors && len <= max_length;
  };
  auto axiom3 = map_items(
      span,
      [&](const CETerm& ta) {
        std::vector<bool> out;
        CEChain a(ta, 1);
        const int pa = ta.parity();
        for (const auto& tb : span) {
          if (!fits({&ta, &tb})) continue;
          CEChain b(tb, 1);
          auto lhs = ce_delta(multiply(a, b));
          auto rhs = multiply(ce_delta(a), b) + Rational(sign_of_parity(pa)) * multiply(a, ce_delta(b)) +
                     extended_bracket(a, b);
          out.push_back(lhs == rhs);
        }
        return out;
      },
      o.execution);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (bool ok : axiom3[i]) r.record("BV axiom 3", ok, [&] { return to_string(span[i]); });
  auto axiom1 = map_items(
      span,
      [&](const CETerm& ta) {
        std::vector<bool> out;
        CEChain a(ta, 1);
        for (const auto& tb : span) {
          if (!fits({&ta, &tb})) continue;
          CEChain b(tb, 1);
          const int pb = tb.parity();
          auto ab = extended_bracket(a, b);
          for (const auto& tc : span) {
            if (!fits({&ta, &tb, &tc})) continue;
            CEChain c(tc, 1);
            auto lhs = extended_bracket(a, multiply(b, c));
            auto rhs = multiply(ab, c) + Rational(sign_of_parity((ta.parity() + 1) * pb)) * multiply(b, extended_bracket(a, c));
            out.push_back(lhs == rhs);
          }
        }
        return out;
      },
      o.execution);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (bool ok : axiom1[i]) r.record("BV axiom 1", ok, [&] { return to_string(span[i]); });
  return r;
}

VerifyReport verify_chain_map(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "chainmap";
  for (int e = 1; e <= o.max_edges; ++e) {
    auto gens = generators(e, ComplexKind::srgc, o);
    auto lines = map_items(
        gens,
        [&](const GraphCode& code) {
          GeneratorLine line;
          line.hash = code_hash(code);
          auto g = decode(code);
          auto x = x_gamma(g);
          auto target = chain_of(g);
          auto image = wick_map(x);
          if (image != target) {
            line.ok = false;
            line.detail = "round trip: I(x) - G has " + first_term(image - target);
            return line;
          }
          auto dx = outer_differential(x);
          const std::pair<WickColumn, ComplexKind> cols[] = {{WickColumn::full, ComplexKind::srgc},
                                                             {WickColumn::krgc, ComplexKind::krgc},
                                                             {WickColumn::rgc, ComplexKind::rgc}};
          for (const auto& [col, k] : cols) {
            if (!in_complex(g, k)) continue;
            auto lhs = wick_map(restrict_column(dx, col));
            auto rhs = differential(target, k);
            if (lhs != rhs) {
              line.ok = false;
              line.detail = std::string(to_string(k)) + ": I(Dx) - dI(x) has " + first_term(lhs - rhs);
              return line;
            }
          }
          return line;
        },
        o.execution);
    for (auto& line : lines) {
      r.record("chain map", line.ok, [&] { return line.hash + " " + line.detail; });
      r.generators.push_back(std::move(line));
    }
  }
  return r;
}

VerifyReport verify_hopf(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "hopf";
  std::vector<GraphCode> parts;
  for (int e = 1; e <= o.max_edges; ++e)
    for (auto& c : generators(e, ComplexKind::srgc, o, false, true)) parts.push_back(std::move(c));
  for (const auto& a : parts) {
    auto ga = decode(a);
    auto xa = x_gamma(ga);
    auto ca = chain_of(ga);
    auto da = boundary(ca);
    auto results = map_items(
        parts,
        [&](const GraphCode& b) {
          ItemResult it;
          auto gb = decode(b);
          auto u = disjoint_union(ga, gb);
          auto xb = x_gamma(gb);
          TensorChain xb_shifted;
          for (const auto& [t, q] : xb) xb_shifted.add(shift_indices(t, ga.edge_count()), q);
          auto prod = multiply(xa, xb_shifted);
          auto cb = chain_of(gb);
          auto graph_prod = multiply(ca, cb);
          it.checks.push_back({"I multiplicative", wick_map(prod) == graph_prod});
          it.checks.push_back({"x of union = product", x_gamma(u) == (graph_prod.is_zero() ? TensorChain{} : prod)});
          auto lhs = boundary(graph_prod);
          auto rhs = multiply(da, cb) + Rational(sign_of_parity(ga.edge_count())) * multiply(ca, boundary(cb));
          it.checks.push_back({"boundary is a derivation", lhs == rhs});
          auto comps = connected_components(canonical_form(u).code);
          std::vector<GraphCode> expect{a, b};
          std::sort(expect.begin(), expect.end());
          it.checks.push_back({"components recovered", comps == expect});
          it.detail = code_hash(b);
          return it;
        },
        o.execution);
    std::vector<std::string> labels(parts.size(), code_hash(a) + " x");
    record_items(r, results, labels);
  }
  return r;
}

VerifyReport verify_wick_rank(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "wick-rank";
  std::mt19937_64 rng(o.seed);
  for (int e = 1; e <= o.max_edges; ++e) {
    auto basis = generators(e, ComplexKind::srgc, o);
    std::map<GraphCode, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    std::vector<GraphChain> images;
    for (const auto& code : basis) {
      auto g = decode(code);
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<int> perm(static_cast<std::size_t>(g.half_edge_count()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        std::shuffle(h.edges.begin(), h.edges.end(), rng);
        images.push_back(wick_map(x_gamma(h)));
      }
    }
    // zero-flagged graphs contribute nothing
    for (const auto& code : generators(e, ComplexKind::srgc, o, true))
      if (!index.count(code)) images.push_back(wick_map(x_gamma(decode(code))));
    SparseMatrix m(static_cast<int>(images.size()), static_cast<int>(basis.size()));
    bool inside = true;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (const auto& [c, q] : images[i]) {
        auto it = index.find(c);
        if (it == index.end()) {
          inside = false;
          continue;
        }
        m.add(static_cast<int>(i), it->second, q);
      }
    r.record("images lie in the basis", inside, [&] { return std::to_string(e) + " edges"; });
    const int rank = rank_sparse(m);
    r.record("rank equals basis size", rank == static_cast<int>(basis.size()), [&] {
      return std::to_string(e) + " edges: rank " + std::to_string(rank) + " vs " + std::to_string(basis.size());
    });
  }
  return r;
}

VerifyReport verify_chords(const VerifyOptions& o, int max_k, int samples) {
  VerifyReport r;
  r.suite = "chords";
  long expect = 1;
  for (int k = 1; k <= max_k; ++k) {
    expect *= 2 * k - 1;
    auto ds = chord_diagrams(k);
    r.record("(2k-1)!! diagrams", static_cast<long>(ds.size()) == expect,
             [&] { return "k=" + std::to_string(k) + ": " + std::to_string(ds.size()); });
    bool covering = true;
    for (const auto& d : ds) {
      std::vector<int> seen(static_cast<std::size_t>(2 * k), 0);
      for (const auto& [i, j] : d.pairs) {
        if (i >= j) covering = false;
        ++seen[static_cast<std::size_t>(i)];
        ++seen[static_cast<std::size_t>(j)];
      }
      covering = covering && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    }
    r.record("each slot covered once", covering, [&] { return "k=" + std::to_string(k); });
    std::vector<std::vector<std::array<int, 2>>> all;
    for (const auto& d : ds) all.push_back(d.pairs);
    std::sort(all.begin(), all.end());
    r.record("no duplicate diagrams", std::adjacent_find(all.begin(), all.end()) == all.end(),
             [&] { return "k=" + std::to_string(k); });
  }
  // random tensors with an odd number of slots
  std::mt19937_64 rng(o.seed);
  const SymplecticSpace V{3};
  const auto letters = V.letters();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1), nv(1, 3), nf(1, 2), len(1, 4), defect(0, 1);
  for (int s = 0; s < samples; ++s) {
    DecoratedTensor x;
    const int vertices = nv(rng);
    for (int v = 0; v < vertices; ++v) {
      std::vector<CyclicWord> fs;
      const int factors = nf(rng);
      for (int f = 0; f < factors; ++f) {
        LetterString w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(letters[static_cast<std::size_t>(pick(rng))]);
        fs.push_back(normalize_word(w).word);
      }
      x.vertices.push_back(CETerm{defect(rng), defect(rng), std::move(fs)});
    }
    if (x.slot_count() % 2 == 0) {
      // make it odd: append one letter to the last factor
      auto& last = x.vertices.back().factors.back();
      LetterString w = last.letters();
      w.push_back(letters[static_cast<std::size_t>(pick(rng))]);
      last = normalize_word(w).word;
    }
    r.record("odd slot count maps to zero", wick_map(x).is_zero());
  }
  return r;
}

VerifyReport verify_homology(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "homology";
  for (auto k : kComplexes)
    for (auto t : stable_types(o.euler_bound)) {
      auto slice = build_slice(k, t, true, o.max_edges, o.execution, o.euler_bound);
      const std::string label = std::string(to_string(k)) + " (g,n)=(" + std::to_string(t.genus) + "," +
                                std::to_string(t.marked) + ")";
      for (std::size_t d = 2; d + 1 < slice.boundary.size(); ++d) {
        auto prod = slice.boundary[d].multiply(slice.boundary[d + 1]);
        r.record("matrices compose to zero", prod.is_zero(), [&] { return label + " degree " + std::to_string(d); });
      }
      auto sparse = homology_ranks(slice, RankMethod::sparse, o.execution);
      auto dense = homology_ranks(slice, RankMethod::dense, o.execution);
      r.record("sparse ranks = dense ranks", sparse.ranks == dense.ranks, [&] { return label; });
      r.record("Euler identity", sparse.euler_betti() == sparse.euler_cells(), [&] { return label; });
      bool nonneg = std::all_of(sparse.betti.begin(), sparse.betti.end(), [](int b) { return b >= 0; });
      r.record("betti numbers nonnegative", nonneg, [&] { return label; });
    }
  return r;
}

VerifyReport verify_enumeration(const VerifyOptions& o) {
  VerifyReport r;
  r.suite = "enumeration";
  for (auto k : kComplexes)
    for (bool connected : {true, false})
      for (int e = 1; e <= o.max_edges; ++e) {
        EnumerationOptions opt;
        opt.edges = e;
        opt.complex = k;
        opt.connected = connected;
        opt.euler_bound = o.euler_bound;
        opt.execution = o.execution;
        auto fast = enumerate(opt);
        auto naive = enumerate_naive(opt);
        r.record("enumerate = naive", fast == naive, [&] {
          return std::string(to_string(k)) + (connected ? " connected" : " all") + " E=" + std::to_string(e) + ": " +
                 std::to_string(fast.size()) + " vs " + std::to_string(naive.size());
        });
      }
  return r;
}

}  // namespace srg
