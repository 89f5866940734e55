#pragma once

// Cyclic words over the odd symplectic space Q^{d|d}: the Lie bialgebra of
// noncommutative 0-forms (bracket, cobracket), vector fields acting on the
// tensor algebra, their divergence, and Hamiltonian vector fields.
//
// Sign conventions: every reordering of letters carries the Koszul sign
// computed from letter parities (x_i even, xi_i odd). The exterior
// derivative used to read off Hamiltonian fields is taken to be odd, so that
// {a,b} = L_alpha(b) holds exactly for alpha = hamiltonian_field(a).

#include "srg/combination.hpp"
#include "srg/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srg {

/// A coordinate function x_i (even) or xi_i (odd), i >= 1. Ordered even
/// before odd, then by index.
struct Letter {
  bool odd = false;
  std::uint8_t index = 1;

  static Letter x(int i) { return Letter{false, static_cast<std::uint8_t>(i)}; }
  static Letter xi(int i) { return Letter{true, static_cast<std::uint8_t>(i)}; }

  int parity() const { return odd ? 1 : 0; }
  Letter dual() const { return Letter{!odd, index}; }

  auto operator<=>(const Letter&) const = default;
};

/// The inverse pairing <a,b>^{-1}: 1 when {a,b} = {x_i, xi_i}, else 0.
inline int pairing(Letter a, Letter b) { return (a.index == b.index && a.odd != b.odd) ? 1 : 0; }

std::string to_string(Letter l);
Letter parse_letter(std::string_view text);

using LetterString = std::vector<Letter>;

int parity(std::span<const Letter> letters);

/// Prints "x1.xi1.x2"; the empty string prints as "1".
std::string to_string(std::span<const Letter> letters);
LetterString parse_letters(std::string_view text);

struct SymplecticSpace {
  int dim = 1;

  bool contains(Letter l) const { return l.index >= 1 && l.index <= dim; }
  /// x_1..x_d, xi_1..xi_d.
  std::vector<Letter> letters() const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;
};

/// A cyclic word in rotation-minimal normal form. The empty word is the unit 1.
class CyclicWord {
 public:
  CyclicWord() = default;

  const LetterString& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int parity() const { return srg::parity(letters_); }
  int max_index() const;

  /// Shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  explicit CyclicWord(LetterString letters) : letters_(std::move(letters)) {}
  friend struct NormalizedWord normalize_word(std::span<const Letter> letters);

  LetterString letters_;
};

std::string to_string(const CyclicWord& w);

/// Result of cyclic normalization: word = sign * (rotation-minimal form).
/// sign == 0 marks a word equal to its own negative.
struct NormalizedWord {
  CyclicWord word;
  int sign = 1;

  bool is_zero() const { return sign == 0; }
};

NormalizedWord normalize_word(std::span<const Letter> letters);

/// Koszul sign of rotating letters[0..n) to letters[r..n) letters[0..r).
int rotation_sign(std::span<const Letter> letters, std::size_t r);

using WordCombination = Combination<CyclicWord>;
using WordPair = std::pair<CyclicWord, CyclicWord>;
/// Elements of h (x) h.
using TensorSquareElement = Combination<WordPair>;

/// Adds coeff * [letters] after cyclic normalization.
void add_word(WordCombination& out, std::span<const Letter> letters, const Rational& coeff);
void add_word_pair(TensorSquareElement& out, std::span<const Letter> left, std::span<const Letter> right,
                   const Rational& coeff);

/// An element of h[V] for a fixed symplectic space.
class HamiltonianElement {
 public:
  explicit HamiltonianElement(SymplecticSpace space) : space_(space) {}
  HamiltonianElement(SymplecticSpace space, WordCombination terms);

  static HamiltonianElement monomial(SymplecticSpace space, std::span<const Letter> letters,
                                     const Rational& coeff = 1);
  static HamiltonianElement parse(SymplecticSpace space, std::string_view word, const Rational& coeff = 1) {
    auto ls = parse_letters(word);
    return monomial(space, ls, coeff);
  }

  void add(std::span<const Letter> letters, const Rational& coeff);

  const SymplecticSpace& space() const { return space_; }
  const WordCombination& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  HamiltonianElement& operator+=(const HamiltonianElement& o);
  HamiltonianElement& operator-=(const HamiltonianElement& o);
  friend HamiltonianElement operator+(HamiltonianElement a, const HamiltonianElement& b) { return a += b; }
  friend HamiltonianElement operator-(HamiltonianElement a, const HamiltonianElement& b) { return a -= b; }
  friend HamiltonianElement operator*(const Rational& s, HamiltonianElement a) {
    a.terms_ *= s;
    return a;
  }
  friend bool operator==(const HamiltonianElement& a, const HamiltonianElement& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  void check(std::span<const Letter> letters) const;

  SymplecticSpace space_;
  WordCombination terms_;
};

/// One term (f_1 ... f_k) d/dz of a derivation of the tensor algebra.
struct FieldTerm {
  Letter direction;
  LetterString coefficient;

  int parity() const { return (srg::parity(coefficient) + direction.parity()) & 1; }
  auto operator<=>(const FieldTerm&) const = default;
};

/// A derivation of T(V*), stored by its values on the generators.
struct VectorField {
  SymplecticSpace space;
  Combination<FieldTerm> terms;

  explicit VectorField(SymplecticSpace s) : space(s) {}
  static VectorField monomial(SymplecticSpace s, Letter direction, LetterString coefficient,
                              const Rational& c = 1);
  bool is_zero() const { return terms.is_zero(); }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.terms == b.terms; }
};

// ---- bialgebra structure -------------------------------------------------

/// Necklace bracket of two word representatives (odd bracket).
WordCombination bracket_words(const CyclicWord& a, const CyclicWord& b);
HamiltonianElement bracket(const HamiltonianElement& a, const HamiltonianElement& b);

/// Cobracket with the exact 1/2 and the [1 + (1 2)] symmetrization.
TensorSquareElement cobracket_word(const CyclicWord& a);
TensorSquareElement cobracket(const HamiltonianElement& a);

// ---- vector fields -------------------------------------------------------

/// Action of a vector field on a (non-cyclic) tensor word, as a derivation.
Combination<LetterString> apply_field(const VectorField& f, std::span<const Letter> word);

/// Graded commutator [f, g] = f g - (-1)^{fg} g f of homogeneous terms, extended bilinearly.
VectorField commutator(const VectorField& f, const VectorField& g);

TensorSquareElement divergence(const VectorField& f);

/// The field alpha with da = i_alpha(omega): alpha(z) is the cyclic
/// derivative of a with respect to the dual letter of z.
VectorField hamiltonian_field(const HamiltonianElement& a);

HamiltonianElement lie_derivative(const VectorField& f, const HamiltonianElement& b);
/// (L_f (x) 1 + 1 (x) L_f) with the Koszul sign on the second slot.
TensorSquareElement lie_derivative(const VectorField& f, const TensorSquareElement& t);

// ---- linear changes of coordinates --------------------------------------

/// A linear substitution of letters: each letter maps to a combination of
/// letters. Letters without an entry map to themselves.
class LetterSubstitution {
 public:
  using Image = std::vector<std::pair<Letter, Rational>>;

  void set(Letter from, Image image) { table_[from] = std::move(image); }
  Image image(Letter l) const;

  Combination<LetterString> apply(std::span<const Letter> word) const;
  WordCombination apply(const WordCombination& w) const;
  TensorSquareElement apply(const TensorSquareElement& t) const;

 private:
  std::map<Letter, Image> table_;
};

/// Rewrites a vector field in new coordinates. `new_in_old` expresses every
/// new coordinate through old letters, `old_in_new` is its inverse.
VectorField change_coordinates(const VectorField& f, const LetterSubstitution& new_in_old,
                               const LetterSubstitution& old_in_new);

/// Every nonzero cyclic word with min_len <= length <= max_len, sorted.
std::vector<CyclicWord> all_words(SymplecticSpace space, int max_len, int min_len = 0);
/// Every (non-cyclic) letter string with length <= max_len.
std::vector<LetterString> all_strings(SymplecticSpace space, int max_len);

std::string to_string(const WordCombination& c);
std::string to_string(const TensorSquareElement& t);

}  // namespace srg
