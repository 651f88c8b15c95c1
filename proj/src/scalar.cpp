#include "nilp/scalar.hpp"

#include "nilp/errors.hpp"

#include <algorithm>
#include <cctype>

namespace nilp {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw ParseError("invalid scalar \"" + std::string(text) + "\"");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in scalar \"" + std::string(text) + "\"");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& s) {
  Scalar c = s;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace nilp
