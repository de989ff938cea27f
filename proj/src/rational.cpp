#include "geoprove/rational.hpp"

#include <cctype>

#include "geoprove/errors.hpp"

namespace geoprove {

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw MathError("empty rational literal");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
      throw MathError("malformed rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw MathError("malformed rational literal: " + text);
  if (r.get_den() == 0) throw MathError("zero denominator in rational literal: " + text);
  r.canonicalize();
  return r;
}

}  // namespace geoprove
