#include "srg/lambda.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace srg {

namespace {

int factors_parity(const std::vector<CyclicWord>& fs, std::size_t from, std::size_t to) {
  int p = 0;
  for (std::size_t k = from; k < to; ++k) p ^= fs[k].parity();
  return p;
}

std::vector<CyclicWord> without(const std::vector<CyclicWord>& fs, std::size_t i) {
  std::vector<CyclicWord> out;
  out.reserve(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (k != i) out.push_back(fs[k]);
  return out;
}

CEChain map_terms(const CEChain& c, Execution ex, CEChain (*f)(const CETerm&, const Rational&)) {
  std::vector<std::pair<CETerm, Rational>> items(c.begin(), c.end());
  return map_reduce(
      items, [&](const std::pair<CETerm, Rational>& it) { return f(it.first, it.second); }, CEChain{},
      [](CEChain& acc, CEChain part) { acc += part; }, ex);
}

CEChain delta_term(const CETerm& t, const Rational& c) {
  CEChain out;
  const auto& fs = t.factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const int wi = fs[i].parity(), wj = fs[j].parity();
      int p = wi * factors_parity(fs, 0, i) + wj * factors_parity(fs, 0, j) + wi * wj;
      std::vector<CyclicWord> rest;
      for (std::size_t k = 0; k < fs.size(); ++k)
        if (k != i && k != j) rest.push_back(fs[k]);
      for (const auto& [w, cw] : bracket_words(fs[i], fs[j])) {
        std::vector<CyclicWord> nf{w};
        nf.insert(nf.end(), rest.begin(), rest.end());
        add_term(out, t.gamma, t.nu, std::move(nf), c * cw * sign_of_parity(p));
      }
    }
  }
  return out;
}

CEChain cobracket_term(const CETerm& t, const Rational& c) {
  CEChain out;
  const auto& fs = t.factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    int p = fs[i].parity() * factors_parity(fs, 0, i);
    auto rest = without(fs, i);
    for (const auto& [yz, cw] : cobracket_word(fs[i])) {
      std::vector<CyclicWord> nf{yz.first, yz.second};
      nf.insert(nf.end(), rest.begin(), rest.end());
      add_term(out, t.gamma, t.nu, std::move(nf), c * cw * sign_of_parity(p));
    }
  }
  return out;
}

CEChain raw_d_term(const CETerm& t, const Rational& c) {
  CEChain out;
  for (const auto& [k, v] : delta_term(t, c)) {
    CETerm shifted = k;
    shifted.gamma += 1;
    out.add(shifted, v);
  }
  out += cobracket_term(t, c);
  return out;
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r' || t.back() == '\n')) t.remove_suffix(1);
  return t;
}

int parse_exponent(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw std::invalid_argument("bad exponent");
  return v;
}

}  // namespace

int CETerm::parity() const { return factors_parity(factors, 0, factors.size()); }

int CETerm::total_length() const {
  int n = 0;
  for (const auto& f : factors) n += static_cast<int>(f.size());
  return n;
}

NormalizedTerm normalize_term(int gamma, int nu, std::vector<CyclicWord> factors) {
  NormalizedTerm out;
  out.term.gamma = gamma;
  out.term.nu = nu;
  auto& fs = out.term.factors;
  fs.reserve(factors.size());
  for (auto& f : factors) {
    if (f.empty())
      ++out.term.nu;
    else
      fs.push_back(std::move(f));
  }
  // insertion sort; each swap of two odd factors flips the sign
  int sign = 1;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    for (std::size_t j = i; j > 0 && fs[j] < fs[j - 1]; --j) {
      if (fs[j].parity() && fs[j - 1].parity()) sign = -sign;
      std::swap(fs[j], fs[j - 1]);
    }
  }
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i] == fs[i - 1] && fs[i].parity()) sign = 0;
  out.sign = sign;
  return out;
}

void add_term(CEChain& out, int gamma, int nu, std::vector<CyclicWord> factors, const Rational& coeff) {
  if (coeff == 0) return;
  auto nt = normalize_term(gamma, nu, std::move(factors));
  if (nt.is_zero()) return;
  out.add(nt.term, coeff * nt.sign);
}

CEChain make_chain(int gamma, int nu, std::vector<CyclicWord> factors, const Rational& coeff) {
  CEChain c;
  add_term(c, gamma, nu, std::move(factors), coeff);
  return c;
}

bool in_lambda(const CETerm& t) {
  if (t.factors.empty()) return false;
  if (t.factors.size() == 1 && t.factors[0].size() == 1) return t.gamma + t.nu >= 1;
  return true;
}

std::optional<std::string> lambda_violation(const CEChain& c) {
  for (const auto& [t, q] : c) {
    if (t.factors.empty()) return "pure scalar term " + to_string(t);
    if (!in_lambda(t)) return "linear term without gamma or nu: " + to_string(t);
  }
  return std::nullopt;
}

CEChain ce_delta(const CEChain& c, Execution ex) { return map_terms(c, ex, &delta_term); }

CEChain extended_cobracket(const CEChain& c, Execution ex) { return map_terms(c, ex, &cobracket_term); }

CEChain deformed_differential_raw(const CEChain& c, Execution ex) { return map_terms(c, ex, &raw_d_term); }

CEChain deformed_differential(const CEChain& c, Execution ex) {
  if (auto v = lambda_violation(c)) throw std::invalid_argument("deformed_differential: " + *v);
  return quotient_scalars(deformed_differential_raw(c, ex));
}

CEChain quotient_scalars(const CEChain& c) {
  CEChain out;
  for (const auto& [t, q] : c)
    if (!t.factors.empty()) out.add(t, q);
  return out;
}

CEChain extended_bracket(const CEChain& a, const CEChain& b) {
  CEChain out;
  for (const auto& [F, cf] : a) {
    const int pF = F.parity();
    for (const auto& [G, cg] : b) {
      for (std::size_t i = 0; i < F.factors.size(); ++i) {
        for (std::size_t j = 0; j < G.factors.size(); ++j) {
          const int wi = F.factors[i].parity(), wj = G.factors[j].parity();
          int p = wi * factors_parity(F.factors, 0, i) + wj * (pF + factors_parity(G.factors, 0, j)) + wi * wj;
          std::vector<CyclicWord> rest = without(F.factors, i);
          auto rg = without(G.factors, j);
          rest.insert(rest.end(), rg.begin(), rg.end());
          for (const auto& [w, cw] : bracket_words(F.factors[i], G.factors[j])) {
            std::vector<CyclicWord> nf{w};
            nf.insert(nf.end(), rest.begin(), rest.end());
            add_term(out, F.gamma + G.gamma, F.nu + G.nu, std::move(nf), cf * cg * cw * sign_of_parity(p));
          }
        }
      }
    }
  }
  return out;
}

CEChain multiply(const CEChain& a, const CEChain& b) {
  CEChain out;
  for (const auto& [F, cf] : a)
    for (const auto& [G, cg] : b) {
      std::vector<CyclicWord> nf = F.factors;
      nf.insert(nf.end(), G.factors.begin(), G.factors.end());
      add_term(out, F.gamma + G.gamma, F.nu + G.nu, std::move(nf), cf * cg);
    }
  return out;
}

CEChain specialize(const CEChain& c, bool set_nu_zero, bool set_gamma_zero) {
  CEChain out;
  for (const auto& [t, q] : c) {
    if (set_nu_zero && t.nu > 0) continue;
    if (set_gamma_zero && t.gamma > 0) continue;
    out.add(t, q);
  }
  return out;
}

HamiltonianElement project_to_g(const CEChain& c, SymplecticSpace space) {
  HamiltonianElement out(space);
  for (const auto& [t, q] : c) {
    if (t.gamma > 0 || t.nu > 0)
      throw std::invalid_argument("project_to_g: chain is not specialized at gamma = nu = 0");
    if (t.factors.size() == 1 && t.factors[0].size() >= 2)
      out += HamiltonianElement(space, WordCombination(t.factors[0], q));
  }
  return out;
}

bool is_linear_symplectic(const CyclicWord& w) { return w.size() == 2; }

std::vector<CyclicWord> pe_basis(SymplecticSpace space) { return all_words(space, 2, 2); }

std::vector<CETerm> lambda_spanning_set(SymplecticSpace space, int max_factors, int max_total_length) {
  const auto words = all_words(space, max_total_length, 1);
  std::vector<CETerm> out;
  std::vector<CyclicWord> cur;
  // nondecreasing factor sequences (as indices into `words`)
  auto rec = [&](auto&& self, std::size_t start, int length) -> void {
    if (!cur.empty()) {
      auto nt = normalize_term(0, 0, cur);
      if (!nt.is_zero()) {
        if (cur.size() == 1 && cur[0].size() == 1) {
          out.push_back(CETerm{1, 0, nt.term.factors});
          out.push_back(CETerm{0, 1, nt.term.factors});
        } else {
          out.push_back(nt.term);
        }
      }
    }
    if (static_cast<int>(cur.size()) == max_factors) return;
    for (std::size_t k = start; k < words.size(); ++k) {
      int len = length + static_cast<int>(words[k].size());
      if (len > max_total_length) continue;
      cur.push_back(words[k]);
      self(self, k, len);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::string to_string(const CETerm& t) {
  std::string out = "gamma^" + std::to_string(t.gamma) + " * nu^" + std::to_string(t.nu) + " * (";
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += " | ";
    out += to_string(t.factors[i]);
  }
  return out + ")";
}

std::string to_string(const CEChain& c) {
  std::string out;
  for (const auto& [t, q] : c) out += to_string(q) + " * " + to_string(t) + "\n";
  return out;
}

CEChain parse_chain_line(std::string_view line) {
  line = trim(line);
  auto open = line.find('(');
  auto close = line.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw std::invalid_argument("chain line: missing factor list");
  if (!trim(line.substr(close + 1)).empty()) throw std::invalid_argument("chain line: trailing text");
  Rational coeff = 1;
  int gamma = 0, nu = 0;
  std::string_view head = line.substr(0, open);
  bool first = true;
  while (true) {
    auto star = head.find('*');
    std::string_view part = trim(head.substr(0, star));
    if (star == std::string_view::npos) {
      if (!part.empty()) throw std::invalid_argument("chain line: expected '*' before factor list");
      break;
    }
    if (part.starts_with("gamma^"))
      gamma = parse_exponent(part.substr(6));
    else if (part.starts_with("nu^"))
      nu = parse_exponent(part.substr(3));
    else if (first)
      coeff = parse_rational(part);
    else
      throw std::invalid_argument("chain line: unexpected token");
    first = false;
    head.remove_prefix(star + 1);
  }
  std::vector<CyclicWord> factors;
  Rational sign = 1;
  std::string_view body = trim(line.substr(open + 1, close - open - 1));
  if (!body.empty()) {
    while (true) {
      auto bar = body.find('|');
      auto ls = parse_letters(body.substr(0, bar));
      auto nw = normalize_word(ls);
      if (nw.is_zero()) return CEChain{};
      sign *= nw.sign;
      factors.push_back(nw.word);
      if (bar == std::string_view::npos) break;
      body.remove_prefix(bar + 1);
    }
  }
  return make_chain(gamma, nu, std::move(factors), coeff * sign);
}

}  // namespace srg
