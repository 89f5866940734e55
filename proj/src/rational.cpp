#include "srg/rational.hpp"

#include <stdexcept>
#include <string>

namespace srg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || i == start || i + 1 == s.size()) throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (start == s.size()) throw std::invalid_argument("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace srg
