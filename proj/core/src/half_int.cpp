#include "superloop/half_int.hpp"

#include <cctype>
#include <cstdlib>

#include "superloop/error.hpp"

namespace superloop {

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
  auto is_int = [](const std::string& s, bool sign) {
    if (s.empty()) return false;
    std::size_t i = (sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text, true))
      throw error(errc::parse_error, "bad degree literal '" + text + "'");
    return HalfInt::whole(std::strtol(text.c_str(), nullptr, 10));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num, true) || den != "2")
    throw error(errc::parse_error, "bad degree literal '" + text + "'");
  return HalfInt::from_twice(std::strtol(num.c_str(), nullptr, 10));
}

}  // namespace superloop
