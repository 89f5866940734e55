#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/lambda.hpp"

using namespace srg;

namespace {

const SymplecticSpace V2{2};

CyclicWord W(const char* s) {
  auto nw = normalize_word(parse_letters(s));
  REQUIRE(nw.sign == 1);
  return nw.word;
}

CEChain C(std::vector<CyclicWord> fs, int gamma = 0, int nu = 0) { return make_chain(gamma, nu, std::move(fs)); }

Rational koszul(int a, int b) { return sign_of_parity(a * b); }

// Shifted bracket [a,b] = (-1)^{|a|} {a,b}; an ordinary graded Lie bracket in shifted parity.
CEChain shifted(const CEChain& a, int pa, const CEChain& b) {
  return Rational(sign_of_parity(pa)) * extended_bracket(a, b);
}

std::vector<CEChain> small_suite(int max_factors, int max_len) {
  std::vector<CEChain> out;
  for (const auto& t : lambda_spanning_set(V2, max_factors, max_len)) out.push_back(CEChain(t, 1));
  return out;
}

}  // namespace

TEST_CASE("symmetric product normal form") {
  auto x1 = W("x1"), xi1 = W("xi1"), xi2 = W("xi2");
  auto nt = normalize_term(0, 0, {xi2, xi1});
  CHECK(nt.sign == -1);
  CHECK(nt.term.factors == std::vector<CyclicWord>{xi1, xi2});
  CHECK(normalize_term(0, 0, {xi1, x1}).sign == 1);
  CHECK(normalize_term(0, 0, {xi1, x1, xi1}).is_zero());
  CHECK(normalize_term(0, 0, {x1, x1}).sign == 1);
  auto scalar = normalize_term(0, 1, {CyclicWord{}, CyclicWord{}});
  CHECK(scalar.term.nu == 3);
  CHECK(scalar.term.factors.empty());
}

TEST_CASE("membership") {
  CHECK_FALSE(in_lambda(CETerm{0, 0, {W("x1")}}));
  CHECK(in_lambda(CETerm{1, 0, {W("x1")}}));
  CHECK(in_lambda(CETerm{0, 0, {W("x1.xi1")}}));
  CHECK(in_lambda(CETerm{0, 0, {W("x1"), W("x2")}}));
  CHECK_FALSE(in_lambda(CETerm{2, 1, {}}));
  CHECK_THROWS_AS(deformed_differential(C({W("x1")})), std::invalid_argument);
}

TEST_CASE("delta examples") {
  CHECK(ce_delta(C({W("x1.x1.xi1")})).is_zero());
  // normal-ordered pair: both sign contributions cancel, so delta(a b) = {a,b}
  auto ws = all_words(V2, 3, 1);
  for (const auto& a : ws)
    for (const auto& b : ws) {
      if (!(a < b)) continue;
      CEChain expect;
      for (const auto& [w, c] : bracket_words(a, b)) add_term(expect, 0, 0, {w}, c);
      CHECK(ce_delta(C({a, b})) == expect);
    }
}

TEST_CASE("cobracket of x1 xi1 is a pure nu^2 scalar") {
  auto d = extended_cobracket(C({W("x1.xi1")}));
  CHECK(d == CEChain(CETerm{0, 2, {}}, 1));
  CHECK(deformed_differential_raw(C({W("x1.xi1")})) == d);
  CHECK(deformed_differential(C({W("x1.xi1")})).is_zero());
  CHECK(extended_cobracket(C({W("x1")}, 1, 0)).is_zero());
  CHECK(deformed_differential(C({W("x1.x2.x1")})).is_zero());
}

TEST_CASE("differentials square to zero") {
  for (const auto& t : lambda_spanning_set(V2, 3, 4)) {
    CEChain c(t, 1);
    REQUIRE(ce_delta(ce_delta(c)).is_zero());
    REQUIRE(extended_cobracket(extended_cobracket(c)).is_zero());
    REQUIRE(deformed_differential_raw(deformed_differential_raw(c)).is_zero());
    auto d = deformed_differential(c);
    CHECK_FALSE(lambda_violation(d).has_value());
    CHECK(deformed_differential(d).is_zero());
  }
}

TEST_CASE("BV axioms on a small suite") {
  auto suite = small_suite(2, 3);
  std::vector<CEChain> singles;
  for (const auto& w : all_words(V2, 2, 1)) singles.push_back(C({w}, 0, 0));
  for (const auto& a : suite)
    for (const auto& b : suite) {
      const int pa = a.begin()->first.parity(), pb = b.begin()->first.parity();
      // axiom 3
      auto lhs3 = ce_delta(multiply(a, b));
      auto rhs3 = multiply(ce_delta(a), b) + koszul(pa, 1) * multiply(a, ce_delta(b)) + extended_bracket(a, b);
      REQUIRE(lhs3 == rhs3);
      // axiom 2 for delta, Delta and D
      for (auto d : {&ce_delta, &extended_cobracket, &deformed_differential_raw}) {
        auto dd = [&](const CEChain& x) { return d(x, Execution::serial); };
        auto lhs2 = dd(extended_bracket(a, b)) + extended_bracket(dd(a), b) + koszul(pa, 1) * extended_bracket(a, dd(b));
        REQUIRE(lhs2.is_zero());
      }
      // Delta is a derivation of the product
      auto lhsd = extended_cobracket(multiply(a, b));
      auto rhsd = multiply(extended_cobracket(a), b) + koszul(pa, 1) * multiply(a, extended_cobracket(b));
      REQUIRE(lhsd == rhsd);
      // axiom 1
      for (const auto& c : singles) {
        auto lhs1 = extended_bracket(a, multiply(b, c));
        auto rhs1 = multiply(extended_bracket(a, b), c) + koszul(pa + 1, pb) * multiply(b, extended_bracket(a, c));
        REQUIRE(lhs1 == rhs1);
      }
    }
}

TEST_CASE("odd Jacobi for the extended bracket") {
  auto suite = small_suite(2, 2);
  for (const auto& a : suite)
    for (const auto& b : suite)
      for (const auto& c : suite) {
        const int pa = a.begin()->first.parity(), pb = b.begin()->first.parity();
        const int u = pa + 1, v = pb + 1;
        auto bc = shifted(b, pb, c);
        auto ab = shifted(a, pa, b);
        auto ac = shifted(a, pa, c);
        auto lhs = shifted(a, pa, bc);
        auto rhs = shifted(ab, (pa + pb + 1) % 2, c) + koszul(u, v) * shifted(b, pb, ac);
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("specialization commutes with the differentials") {
  for (const auto& t : lambda_spanning_set(V2, 2, 4)) {
    for (int g = 0; g <= 1; ++g)
      for (int n = 0; n <= 1; ++n) {
        CEChain c(CETerm{t.gamma + g, t.nu + n, t.factors}, 1);
        auto D = [](const CEChain& x) { return deformed_differential(x); };
        // nu = 0: Lambda_gamma with the induced differential
        CHECK(specialize(D(c), true, false) == specialize(D(specialize(c, true, false)), true, false));
        // gamma = 0 leaves only Delta
        CHECK(specialize(D(c), false, true) == specialize(quotient_scalars(extended_cobracket(c)), false, true));
        CHECK(specialize(c, false, false) == c);
        auto sd = specialize(D(c), false, false);
        CHECK_FALSE(lambda_violation(specialize(sd, true, true)).has_value());
      }
  }
}

TEST_CASE("projection to g") {
  auto w = W("x1.x2.xi1.xi2");
  CHECK(project_to_g(C({w}), V2) == HamiltonianElement(V2, WordCombination(w, 1)));
  CHECK(project_to_g(C({W("x1.xi1"), W("x2.x2")}), V2).is_zero());
  CHECK_THROWS_AS(project_to_g(C({w}, 1, 0), V2), std::invalid_argument);
  for (const auto& t : lambda_spanning_set(V2, 3, 5)) {
    CEChain c(t, 1);
    auto lam = specialize(c, true, true);
    if (lam.is_zero()) continue;
    CHECK(project_to_g(specialize(deformed_differential(lam), true, true), V2).is_zero());
  }
}

TEST_CASE("pe embedding") {
  auto pe = pe_basis(V2);
  CHECK(pe.size() == 8);  // 3 even squares/products, 1 odd-odd, 4 mixed
  for (const auto& a : pe) {
    CEChain c = C({a});
    CHECK(specialize(c, true, true) == c);
    CHECK(project_to_g(c, V2) == HamiltonianElement(V2, WordCombination(a, 1)));
    CHECK(quotient_scalars(extended_cobracket(c)).is_zero());
    CHECK(ce_delta(c).is_zero());
    for (const auto& b : pe)
      for (const auto& [w, q] : bracket_words(a, b)) CHECK(is_linear_symplectic(w));
  }
}

TEST_CASE("serial and parallel differentials agree") {
  CEChain big;
  for (const auto& t : lambda_spanning_set(V2, 3, 4)) big.add(t, Rational(static_cast<long>(big.size() % 7) + 1, 3));
  CHECK(deformed_differential_raw(big, Execution::serial) == deformed_differential_raw(big, Execution::parallel));
  CHECK(ce_delta(big, Execution::serial) == ce_delta(big, Execution::parallel));
}

TEST_CASE("chain text format") {
  CEChain c = Rational(-3, 2) * C({W("x1.xi1"), W("x2")}, 2, 1);
  auto line = to_string(c);
  CHECK(line == "-3/2 * gamma^2 * nu^1 * (x2 | x1.xi1)\n");
  CHECK(parse_chain_line(line) == c);
  CHECK(parse_chain_line("(xi1.x1)") == C({W("x1.xi1")}));
  CHECK(parse_chain_line("2 * nu^2 * ()") == CEChain(CETerm{0, 2, {}}, 2));
  CHECK_THROWS_AS(parse_chain_line("2 * (x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_chain_line("2 * foo^1 * (x1)"), std::invalid_argument);
}
