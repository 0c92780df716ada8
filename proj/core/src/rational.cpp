#include "tracta/rational.hpp"

#include <cctype>

#include "tracta/errors.hpp"

namespace tracta {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  bool ok = !s.empty();
  bool seen_slash = false;
  bool digit_run = false;
  for (std::size_t i = 0; ok && i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_run = true;
    } else if (c == '-' && i == 0) {
    } else if (c == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      ok = false;
    }
  }
  if (!ok || !digit_run) throw SchemaError("malformed rational '" + s + "'");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw SchemaError("malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow2(long k) {
  mpz_class p = 1;
  unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
  p <<= a;
  if (k >= 0) return Rational(p);
  Rational q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

}  // namespace tracta
