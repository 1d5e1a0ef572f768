#include "lcs/rational.hpp"

#include <cctype>
#include <ostream>

namespace lcs {

BigInt bigint_from_digits(const std::string& digits) {
  if (digits.empty()) throw Error("bigint_from_digits: empty string");
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  for (std::size_t k = i; k < digits.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(digits[k])))
      throw Error("bigint_from_digits: non-digit in '" + digits + "'");
  return BigInt(digits.substr(i));
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw Error("Rational: empty string");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) throw Error("Rational: malformed literal '" + s + "'");
  BigInt n = bigint_from_digits(s.substr(num_start, i - num_start));
  BigInt d(1);
  if (i < s.size()) {
    if (s[i] != '/') throw Error("Rational: malformed literal '" + s + "'");
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size())
      throw Error("Rational: malformed literal '" + s + "'");
    d = bigint_from_digits(s.substr(den_start));
  }
  if (neg) n = -n;
  return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, int exp) {
  if (exp < 0) return Rational(1) / pow(base, -exp);
  Rational r(1), b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace lcs
