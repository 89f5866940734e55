#pragma once

#include "srg/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>

namespace srg {

/// Finite formal sum of keys with exact rational coefficients.
/// Zero coefficients are never stored; iteration order is the key order,
/// which keeps all printed output deterministic.
template <class Key>
class Combination {
 public:
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  Combination() = default;
  Combination(const Key& key, const Rational& coeff) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Combination& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Combination& operator+=(const Combination& other) {
    add(other);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    add(other, -1);
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

}  // namespace srg
