#include "superloop/rational.hpp"

#include <cctype>

#include "superloop/error.hpp"

namespace superloop {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!is_integer_token(num, /*allow_sign=*/true))
    throw error(errc::parse_error, "bad rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading plus
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(den, /*allow_sign=*/false) || mpz_class(den) == 0)
      throw error(errc::parse_error, "bad rational literal '" + text + "'");
    Rational value{mpz_class(num), mpz_class(den)};
    value.canonicalize();
    return value;
  }
  return Rational(mpz_class(num));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_of(long num, long den) {
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational binomial(long m, unsigned k) {
  Rational result(1);
  for (unsigned i = 0; i < k; ++i) {
    result *= Rational(m - static_cast<long>(i));
    result /= Rational(static_cast<long>(i) + 1);
  }
  return result;
}

}  // namespace superloop
