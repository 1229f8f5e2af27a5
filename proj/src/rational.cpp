#include "cantor/rational.hpp"

namespace cantor {

Rational parse_fraction(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("malformed fraction: '" + text + "'"); };
  auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(Int(text));
  }
  std::string p = text.substr(0, slash), q = text.substr(slash + 1);
  check_int(p);
  check_int(q);
  Int den(q);
  if (den == 0) bad();
  return Rational(Int(p), den);
}

std::string fraction_str(const Rational& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string fraction_str(const Dyadic& d) { return fraction_str(d.to_rational()); }

std::string Dyadic::str() const { return fraction_str(*this); }

}  // namespace cantor
