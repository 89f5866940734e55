#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/words.hpp"

#include <algorithm>

using namespace srg;

namespace {

const SymplecticSpace V2{2};

LetterString L(const char* s) { return parse_letters(s); }

// Sign of rotating w by r, computed by moving the first letter to the back r times.
int walked_rotation_sign(LetterString w, std::size_t r) {
  int s = 1;
  for (std::size_t k = 0; k < r; ++k) {
    Letter first = w.front();
    int rest = 0;
    for (std::size_t t = 1; t < w.size(); ++t) rest += w[t].parity();
    if (first.parity() && (rest & 1)) s = -s;
    w.erase(w.begin());
    w.push_back(first);
  }
  return s;
}

// Brute-force normal form: minimum over all rotations, zero on a sign clash.
std::pair<LetterString, int> oracle_normalize(const LetterString& w) {
  if (w.empty()) return {w, 1};
  LetterString best;
  int sign = 0;
  bool clash = false;
  for (std::size_t r = 0; r < w.size(); ++r) {
    LetterString c(w.begin() + static_cast<long>(r), w.end());
    c.insert(c.end(), w.begin(), w.begin() + static_cast<long>(r));
    int s = walked_rotation_sign(w, r);
    if (sign == 0 || c < best) {
      best = c;
      sign = s;
      clash = false;
    } else if (c == best && s != sign) {
      clash = true;
    }
  }
  return {best, clash ? 0 : sign};
}

HamiltonianElement H(const char* s, Rational c = 1) { return HamiltonianElement::parse(V2, s, c); }

}  // namespace

TEST_CASE("letters and text format") {
  CHECK(to_string(Letter::xi(3)) == "xi3");
  CHECK(parse_letter("x12") == Letter::x(12));
  CHECK(Letter::x(2) < Letter::xi(1));
  CHECK(to_string(std::span<const Letter>(L("x1.xi1.x2"))) == "x1.xi1.x2");
  CHECK(L("1").empty());
  CHECK_THROWS_AS(parse_letter("y1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_letters("x1..x2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_letter("x0"), std::invalid_argument);
}

TEST_CASE("normal form examples") {
  auto a = normalize_word(L("x1"));
  CHECK(a.sign == 1);
  CHECK(a.word.letters() == L("x1"));
  CHECK(normalize_word(L("xi1.xi1")).is_zero());
  auto b = normalize_word(L("x1.xi1"));
  auto c = normalize_word(L("xi1.x1"));
  CHECK(b.word == c.word);
  CHECK(b.sign == c.sign);
}

TEST_CASE("normal form agrees with brute-force rotation walker") {
  for (const auto& s : all_strings(V2, 5)) {
    auto nw = normalize_word(s);
    auto [w, sign] = oracle_normalize(s);
    REQUIRE(nw.sign == sign);
    if (sign != 0) CHECK(nw.word.letters() == w);
  }
}

TEST_CASE("space checks") {
  CHECK_THROWS_AS(HamiltonianElement::parse(SymplecticSpace{1}, "x2"), std::invalid_argument);
  CHECK_THROWS_AS(bracket(H("x1"), HamiltonianElement::parse(SymplecticSpace{3}, "xi1")), std::invalid_argument);
}

TEST_CASE("bracket trivial cases and parity") {
  CHECK(bracket(H("x1.x2"), H("x1.x1.x2")).is_zero());
  CHECK(bracket(H("1"), H("x1.xi1")).is_zero());
  // {x1, xi1} = 1
  auto one = bracket(H("x1"), H("xi1"));
  CHECK(one == H("1"));
  auto ws = all_words(V2, 3, 1);
  for (const auto& a : ws)
    for (const auto& b : ws)
      for (const auto& [w, c] : bracket_words(a, b)) CHECK(w.parity() == (a.parity() + b.parity() + 1) % 2);
}

TEST_CASE("bracket graded symmetry") {
  auto ws = all_words(V2, 3);
  for (const auto& a : ws)
    for (const auto& b : ws) {
      auto ab = bracket_words(a, b);
      auto ba = bracket_words(b, a);
      CHECK(ba == Rational(sign_of_parity(a.parity() * b.parity())) * ab);
    }
}

TEST_CASE("hamiltonian field of x1 xi1") {
  auto f = hamiltonian_field(H("x1.xi1"));
  VectorField expect(V2);
  expect.terms.add(FieldTerm{Letter::x(1), L("x1")}, 1);
  expect.terms.add(FieldTerm{Letter::xi(1), L("xi1")}, -1);
  CHECK(f == expect);
  CHECK(hamiltonian_field(H("1")).is_zero());
  for (const auto& [t, c] : hamiltonian_field(H("x1.xi1.x1.x1")).terms) CHECK(t.direction.index == 1);
}

TEST_CASE("bracket equals Lie derivative along the hamiltonian field") {
  auto ws = all_words(V2, 4);
  for (const auto& a : ws)
    for (const auto& b : ws) {
      HamiltonianElement A(V2, WordCombination(a, 1)), B(V2, WordCombination(b, 1));
      REQUIRE(bracket(A, B) == lie_derivative(hamiltonian_field(A), B));
    }
}

TEST_CASE("lie derivative examples") {
  CHECK(lie_derivative(VectorField(V2), H("x1.xi2")).is_zero());
  auto euler = VectorField::monomial(V2, Letter::x(1), L("x1"));
  CHECK(lie_derivative(euler, H("x1.x2.x1.x1")) == H("x1.x2.x1.x1", 3));
}

TEST_CASE("cobracket examples") {
  CHECK(cobracket(H("x1")).is_zero());
  CHECK(cobracket(H("x1.x2.x1.x2")).is_zero());
  // single (i,j)=(1,2) term: p = 1, both arcs empty, two copies of +1/2
  TensorSquareElement expect(WordPair{CyclicWord{}, CyclicWord{}}, 1);
  CHECK(cobracket(H("x1.xi1")) == expect);
}

TEST_CASE("cobracket is graded symmetric") {
  for (const auto& a : all_words(V2, 5)) {
    auto d = cobracket_word(a);
    for (const auto& [yz, c] : d) {
      WordPair swapped{yz.second, yz.first};
      CHECK(d.coefficient(swapped) == c * sign_of_parity(yz.first.parity() * yz.second.parity()));
    }
  }
}

TEST_CASE("divergence examples") {
  CHECK(divergence(VectorField::monomial(V2, Letter::x(1), {})).is_zero());
  TensorSquareElement unit(WordPair{CyclicWord{}, CyclicWord{}}, 1);
  CHECK(divergence(VectorField::monomial(V2, Letter::x(1), L("x1"))) == unit);
  CHECK(divergence(VectorField::monomial(V2, Letter::x(1), L("xi2"))).is_zero());
}

TEST_CASE("cobracket is half the divergence of the hamiltonian field") {
  for (const auto& a : all_words(V2, 5)) {
    HamiltonianElement A(V2, WordCombination(a, 1));
    CHECK(cobracket(A) == Rational(1, 2) * divergence(hamiltonian_field(A)));
  }
}

TEST_CASE("divergence of a commutator") {
  std::vector<VectorField> fields;
  for (auto z : V2.letters())
    for (const auto& w : all_strings(V2, 2)) fields.push_back(VectorField::monomial(V2, z, w));
  for (const auto& f : fields)
    for (const auto& g : fields) {
      int fp = f.terms.begin()->first.parity();
      int gp = g.terms.begin()->first.parity();
      auto lhs = divergence(commutator(f, g));
      auto rhs = lie_derivative(f, divergence(g)) -
                 Rational(sign_of_parity(fp * gp)) * lie_derivative(g, divergence(f));
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("divergence is invariant under a symplectic change of basis") {
  // x1' = x1 + x2, xi2' = xi2 - xi1, other letters fixed.
  LetterSubstitution new_in_old, old_in_new;
  new_in_old.set(Letter::x(1), {{Letter::x(1), 1}, {Letter::x(2), 1}});
  new_in_old.set(Letter::xi(2), {{Letter::xi(2), 1}, {Letter::xi(1), -1}});
  old_in_new.set(Letter::x(1), {{Letter::x(1), 1}, {Letter::x(2), -1}});
  old_in_new.set(Letter::xi(2), {{Letter::xi(2), 1}, {Letter::xi(1), 1}});
  for (auto z : V2.letters())
    for (const auto& w : all_strings(V2, 2)) {
      auto f = VectorField::monomial(V2, z, w);
      auto moved = change_coordinates(f, new_in_old, old_in_new);
      CHECK(new_in_old.apply(divergence(moved)) == divergence(f));
    }
}
