#include "srg/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace srg {

namespace {

int span_parity(std::span<const Letter> w, std::size_t from, std::size_t to) {
  int p = 0;
  for (std::size_t k = from; k < to; ++k) p ^= w[k].parity();
  return p;
}

LetterString concat(std::span<const Letter> a, std::span<const Letter> b) {
  LetterString out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Drops w[i] and rotates the remainder to w[i+1..] w[..i), returning the Koszul sign.
std::pair<LetterString, int> rest_rotated(std::span<const Letter> w, std::size_t i) {
  LetterString rest(w.begin(), w.begin() + static_cast<long>(i));
  rest.insert(rest.end(), w.begin() + static_cast<long>(i) + 1, w.end());
  int s = rotation_sign(rest, i);
  std::rotate(rest.begin(), rest.begin() + static_cast<long>(i), rest.end());
  return {std::move(rest), s};
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r' || t.back() == '\n')) t.remove_suffix(1);
  return t;
}

}  // namespace

std::string to_string(Letter l) { return (l.odd ? "xi" : "x") + std::to_string(l.index); }

Letter parse_letter(std::string_view text) {
  text = trim(text);
  bool odd = false;
  if (text.starts_with("xi")) {
    odd = true;
    text.remove_prefix(2);
  } else if (text.starts_with("x")) {
    text.remove_prefix(1);
  } else {
    throw std::invalid_argument("bad letter: expected x<i> or xi<i>");
  }
  int idx = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
  if (ec != std::errc() || ptr != text.data() + text.size() || idx < 1 || idx > 255)
    throw std::invalid_argument("bad letter index");
  return Letter{odd, static_cast<std::uint8_t>(idx)};
}

int parity(std::span<const Letter> letters) { return span_parity(letters, 0, letters.size()); }

std::string to_string(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '.';
    out += to_string(letters[i]);
  }
  return out;
}

LetterString parse_letters(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty word text");
  LetterString out;
  if (text == "1") return out;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    out.push_back(parse_letter(text.substr(start, dot == std::string_view::npos ? dot : dot - start)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

std::vector<Letter> SymplecticSpace::letters() const {
  std::vector<Letter> out;
  for (int i = 1; i <= dim; ++i) out.push_back(Letter::x(i));
  for (int i = 1; i <= dim; ++i) out.push_back(Letter::xi(i));
  return out;
}

int CyclicWord::max_index() const {
  int m = 0;
  for (auto l : letters_) m = std::max<int>(m, l.index);
  return m;
}

std::string to_string(const CyclicWord& w) { return to_string(std::span<const Letter>(w.letters())); }

int rotation_sign(std::span<const Letter> letters, std::size_t r) {
  return sign_of_parity(span_parity(letters, 0, r) & span_parity(letters, r, letters.size()));
}

NormalizedWord normalize_word(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  if (n == 0) return NormalizedWord{CyclicWord{}, 1};
  LetterString best(letters.begin(), letters.end());
  int best_sign = 1;
  bool zero = false;
  LetterString cand(n);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) cand[k] = letters[(r + k) % n];
    int s = rotation_sign(letters, r);
    if (cand < best) {
      best = cand;
      best_sign = s;
      zero = false;
    } else if (cand == best && s != best_sign) {
      zero = true;
    }
  }
  if (zero) return NormalizedWord{CyclicWord{}, 0};
  return NormalizedWord{CyclicWord(std::move(best)), best_sign};
}

void add_word(WordCombination& out, std::span<const Letter> letters, const Rational& coeff) {
  if (coeff == 0) return;
  auto nw = normalize_word(letters);
  if (nw.is_zero()) return;
  out.add(nw.word, coeff * nw.sign);
}

void add_word_pair(TensorSquareElement& out, std::span<const Letter> left, std::span<const Letter> right,
                   const Rational& coeff) {
  if (coeff == 0) return;
  auto l = normalize_word(left);
  auto r = normalize_word(right);
  if (l.is_zero() || r.is_zero()) return;
  out.add(WordPair{l.word, r.word}, coeff * (l.sign * r.sign));
}

// ---- HamiltonianElement ---------------------------------------------------

HamiltonianElement::HamiltonianElement(SymplecticSpace space, WordCombination terms)
    : space_(space), terms_(std::move(terms)) {
  for (const auto& [w, c] : terms_) check(w.letters());
}

HamiltonianElement HamiltonianElement::monomial(SymplecticSpace space, std::span<const Letter> letters,
                                                const Rational& coeff) {
  HamiltonianElement h(space);
  h.add(letters, coeff);
  return h;
}

void HamiltonianElement::check(std::span<const Letter> letters) const {
  if (space_.dim < 1) throw std::invalid_argument("symplectic space dimension must be positive");
  for (auto l : letters)
    if (!space_.contains(l)) throw std::invalid_argument("letter " + to_string(l) + " outside symplectic space");
}

void HamiltonianElement::add(std::span<const Letter> letters, const Rational& coeff) {
  check(letters);
  add_word(terms_, letters, coeff);
}

HamiltonianElement& HamiltonianElement::operator+=(const HamiltonianElement& o) {
  if (!(space_ == o.space_)) throw std::invalid_argument("mismatched symplectic spaces");
  terms_ += o.terms_;
  return *this;
}

HamiltonianElement& HamiltonianElement::operator-=(const HamiltonianElement& o) {
  if (!(space_ == o.space_)) throw std::invalid_argument("mismatched symplectic spaces");
  terms_ -= o.terms_;
  return *this;
}

VectorField VectorField::monomial(SymplecticSpace s, Letter direction, LetterString coefficient, const Rational& c) {
  VectorField f(s);
  f.terms.add(FieldTerm{direction, std::move(coefficient)}, c);
  return f;
}

// ---- bracket and cobracket ------------------------------------------------

WordCombination bracket_words(const CyclicWord& a, const CyclicWord& b) {
  WordCombination out;
  const auto& A = a.letters();
  const auto& B = b.letters();
  const int pa = a.parity();
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (!pairing(A[i], B[j])) continue;
      int p = A[i].parity() * span_parity(A, 0, i) + B[j].parity() * (pa + span_parity(B, 0, j));
      auto [ra, sa] = rest_rotated(A, i);
      auto [rb, sb] = rest_rotated(B, j);
      add_word(out, concat(ra, rb), sign_of_parity(p) * sa * sb);
    }
  }
  return out;
}

HamiltonianElement bracket(const HamiltonianElement& a, const HamiltonianElement& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("bracket: mismatched symplectic spaces");
  WordCombination out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add(bracket_words(wa, wb), ca * cb);
  return HamiltonianElement(a.space(), std::move(out));
}

TensorSquareElement cobracket_word(const CyclicWord& a) {
  TensorSquareElement out;
  const auto& w = a.letters();
  const std::size_t n = w.size();
  auto S = [&](std::size_t from, std::size_t to) { return span_parity(w, from, std::min(to, n)); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!pairing(w[i], w[j])) continue;
      int p = w[i].parity() * S(0, i + 1) + w[j].parity() * S(0, j + 1) + S(0, i) * (S(i + 1, j) ^ S(j + 1, n));
      Rational c(-sign_of_parity(p), 2);  // overall sign: Delta(a) = div(alpha(a)) / 2
      LetterString left(w.begin() + static_cast<long>(i) + 1, w.begin() + static_cast<long>(j));
      LetterString right(w.begin() + static_cast<long>(j) + 1, w.end());
      right.insert(right.end(), w.begin(), w.begin() + static_cast<long>(i));
      add_word_pair(out, left, right, c);
      add_word_pair(out, right, left, c * sign_of_parity(parity(left) * parity(right)));
    }
  }
  return out;
}

TensorSquareElement cobracket(const HamiltonianElement& a) {
  TensorSquareElement out;
  for (const auto& [w, c] : a.terms()) out.add(cobracket_word(w), c);
  return out;
}

// ---- vector fields --------------------------------------------------------

Combination<LetterString> apply_field(const VectorField& f, std::span<const Letter> word) {
  Combination<LetterString> out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    const int pre = span_parity(word, 0, j);
    for (const auto& [t, c] : f.terms) {
      if (t.direction != word[j]) continue;
      LetterString w(word.begin(), word.begin() + static_cast<long>(j));
      w.insert(w.end(), t.coefficient.begin(), t.coefficient.end());
      w.insert(w.end(), word.begin() + static_cast<long>(j) + 1, word.end());
      out.add(w, c * sign_of_parity(t.parity() * pre));
    }
  }
  return out;
}

VectorField commutator(const VectorField& f, const VectorField& g) {
  VectorField out(f.space);
  for (const auto& [tf, cf] : f.terms) {
    VectorField one_f = VectorField::monomial(f.space, tf.direction, tf.coefficient, cf);
    for (const auto& [tg, cg] : g.terms) {
      VectorField one_g = VectorField::monomial(g.space, tg.direction, tg.coefficient, cg);
      const int sign = sign_of_parity(tf.parity() * tg.parity());
      // (f g)(z) = f(g(z)) for the direction of g, and symmetrically.
      for (const auto& [w, c] : apply_field(one_f, tg.coefficient))
        out.terms.add(FieldTerm{tg.direction, w}, c * cg);
      for (const auto& [w, c] : apply_field(one_g, tf.coefficient))
        out.terms.add(FieldTerm{tf.direction, w}, -c * cf * sign);
    }
  }
  return out;
}

TensorSquareElement divergence(const VectorField& f) {
  TensorSquareElement out;
  for (const auto& [t, c] : f.terms) {
    const auto& w = t.coefficient;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != t.direction) continue;
      int s = sign_of_parity(t.direction.parity() * span_parity(w, i, w.size()));
      std::span<const Letter> ws(w);
      add_word_pair(out, ws.subspan(0, i), ws.subspan(i + 1), c * s);
    }
  }
  return out;
}

VectorField hamiltonian_field(const HamiltonianElement& a) {
  VectorField out(a.space());
  for (const auto& [word, ca] : a.terms()) {
    const auto& w = word.letters();
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      const int before = span_parity(w, 0, i);
      const int after = span_parity(w, i + 1, n);
      // d is odd: moving the tail past w[..i) and d(w_i) costs parity(tail) * (before + |w_i| + 1).
      int p = before + after * (before + w[i].parity() + 1);
      LetterString rot(w.begin() + static_cast<long>(i) + 1, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
      out.terms.add(FieldTerm{w[i].dual(), std::move(rot)}, ca * sign_of_parity(p));
    }
  }
  return out;
}

HamiltonianElement lie_derivative(const VectorField& f, const HamiltonianElement& b) {
  if (!(f.space == b.space())) throw std::invalid_argument("lie_derivative: mismatched symplectic spaces");
  WordCombination out;
  for (const auto& [word, cb] : b.terms())
    for (const auto& [w, c] : apply_field(f, word.letters())) add_word(out, w, c * cb);
  return HamiltonianElement(b.space(), std::move(out));
}

TensorSquareElement lie_derivative(const VectorField& f, const TensorSquareElement& t) {
  TensorSquareElement out;
  for (const auto& [tf, cf] : f.terms) {
    VectorField one = VectorField::monomial(f.space, tf.direction, tf.coefficient, cf);
    const int fp = tf.parity();
    for (const auto& [yz, c] : t) {
      const auto& [y, z] = yz;
      for (const auto& [w, cw] : apply_field(one, y.letters())) add_word_pair(out, w, z.letters(), c * cw);
      const int s = sign_of_parity(fp * y.parity());
      for (const auto& [w, cw] : apply_field(one, z.letters())) add_word_pair(out, y.letters(), w, c * cw * s);
    }
  }
  return out;
}

// ---- substitutions --------------------------------------------------------

LetterSubstitution::Image LetterSubstitution::image(Letter l) const {
  auto it = table_.find(l);
  if (it == table_.end()) return Image{{l, Rational(1)}};
  return it->second;
}

Combination<LetterString> LetterSubstitution::apply(std::span<const Letter> word) const {
  Combination<LetterString> acc(LetterString{}, 1);
  for (auto l : word) {
    Combination<LetterString> next;
    auto img = image(l);
    for (const auto& [w, c] : acc) {
      for (const auto& [m, cm] : img) {
        LetterString e = w;
        e.push_back(m);
        next.add(e, c * cm);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

WordCombination LetterSubstitution::apply(const WordCombination& w) const {
  WordCombination out;
  for (const auto& [word, c] : w)
    for (const auto& [e, ce] : apply(word.letters())) add_word(out, e, c * ce);
  return out;
}

TensorSquareElement LetterSubstitution::apply(const TensorSquareElement& t) const {
  TensorSquareElement out;
  for (const auto& [yz, c] : t) {
    auto ly = apply(yz.first.letters());
    auto lz = apply(yz.second.letters());
    for (const auto& [a, ca] : ly)
      for (const auto& [b, cb] : lz) add_word_pair(out, a, b, c * ca * cb);
  }
  return out;
}

VectorField change_coordinates(const VectorField& f, const LetterSubstitution& new_in_old,
                               const LetterSubstitution& old_in_new) {
  VectorField out(f.space);
  for (Letter z_new : f.space.letters()) {
    // f(z') = sum_c c * f(z_old), rewritten in new letters.
    for (const auto& [z_old, c] : new_in_old.image(z_new)) {
      for (const auto& [t, ct] : f.terms) {
        if (t.direction != z_old) continue;
        for (const auto& [w, cw] : old_in_new.apply(t.coefficient))
          out.terms.add(FieldTerm{z_new, w}, c * ct * cw);
      }
    }
  }
  return out;
}

std::vector<LetterString> all_strings(SymplecticSpace space, int max_len) {
  const auto alphabet = space.letters();
  std::vector<LetterString> out{LetterString{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (auto l : alphabet) {
        LetterString w = out[k];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<CyclicWord> all_words(SymplecticSpace space, int max_len, int min_len) {
  std::vector<CyclicWord> out;
  for (const auto& s : all_strings(space, max_len)) {
    if (static_cast<int>(s.size()) < min_len) continue;
    auto nw = normalize_word(s);
    if (!nw.is_zero()) out.push_back(nw.word);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const WordCombination& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [w, q] : c) {
    if (!out.empty()) out += " + ";
    out += to_string(q) + "*" + to_string(w);
  }
  return out;
}

std::string to_string(const TensorSquareElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [yz, q] : t) {
    if (!out.empty()) out += " + ";
    out += to_string(q) + "*(" + to_string(yz.first) + " | " + to_string(yz.second) + ")";
  }
  return out;
}

}  // namespace srg
