#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <utility>

#include "lcs/errors.hpp"

namespace lcs {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers. Always kept in lowest
// terms with positive denominator; there is deliberately no construction
// from floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}            // NOLINT: implicit by design
  Rational(long v) : num_(v), den_(1) {}           // NOLINT
  Rational(long long v) : num_(v), den_(1) {}      // NOLINT
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw Error("Rational: zero denominator");
    normalize();
  }
  Rational(double) = delete;
  Rational(float) = delete;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Combined bit length of numerator and denominator; used for pivot
  // selection in exact elimination to limit coefficient growth.
  unsigned bit_size() const {
    unsigned b = 1;
    if (num_ != 0) b += static_cast<unsigned>(boost::multiprecision::msb(abs(num_)));
    if (den_ != 1) b += static_cast<unsigned>(boost::multiprecision::msb(den_));
    return b;
  }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  static Rational from_string(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct unchecked {};
  Rational(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exp);

/// Decimal digit string to integer; tolerant of leading zeros (which the
/// underlying bigint parser would treat as an octal prefix).
BigInt bigint_from_digits(const std::string& digits);

}  // namespace lcs

namespace Eigen {

template <>
struct NumTraits<lcs::Rational> : GenericNumTraits<lcs::Rational> {
  typedef lcs::Rational Real;
  typedef lcs::Rational NonInteger;
  typedef lcs::Rational Nested;
  typedef lcs::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return lcs::Rational(); }
  static inline Real dummy_precision() { return lcs::Rational(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
