#include "prelie/rational.hpp"

#include <stdexcept>

namespace prelie {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num, true)) throw std::invalid_argument("bad rational: " + std::string(text));
  std::string num_s(num);
  if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(Integer(num_s));
  std::string_view den = text.substr(slash + 1);
  if (!valid_int(den, false)) throw std::invalid_argument("bad rational: " + std::string(text));
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(Integer(num_s), d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Integer ipow(long base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && exp % 2 == 1) r = -r;
  return r;
}

}  // namespace prelie
