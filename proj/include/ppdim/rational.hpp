#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ppdim {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always reduced, denominator > 0. This is the only
// number type the lambda-set routines are allowed to touch; comparisons are
// exact cross-multiplications and no floating point ever enters.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

  // Accepts "p/q" or "p" with optional sign.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("not a rational: '" + s + "'");
    }
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

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
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
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

  // "p/q", or just "p" for integers.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Truncated decimal expansion with the given number of fractional digits.
  std::string decimal(std::size_t digits) const {
    BigInt n = num_ < 0 ? BigInt(-num_) : num_;
    BigInt ip = n / den_;
    BigInt rem = n % den_;
    std::string out = (num_ < 0 ? "-" : "") + ip.str();
    if (digits == 0) return out;
    out += '.';
    for (std::size_t i = 0; i < digits; ++i) {
      rem *= 10;
      const BigInt digit = rem / den_;
      out += char('0' + digit.convert_to<int>());
      rem %= den_;
    }
    return out;
  }

 private:
  struct already_reduced {};
  Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_, den_;
};

// Floor of the integer square root (Newton iteration on big integers).
inline BigInt isqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  if (v < 2) return v;
  BigInt x = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(v)) / 2 + 1);
  for (;;) {
    BigInt y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

// Truncated decimal expansion of sqrt(x) for x >= 0, exact to the digit.
inline std::string sqrt_decimal(const Rational& x, std::size_t digits) {
  if (x.num() < 0) throw std::domain_error("sqrt of negative rational");
  BigInt scale = 1;
  for (std::size_t i = 0; i < digits; ++i) scale *= 10;
  // floor(sqrt(p/q) * 10^d) = floor(sqrt(p * q * 10^{2d}) / q)
  const BigInt s = isqrt(x.num() * x.den() * scale * scale) / x.den();
  const BigInt ip = s / scale;
  if (digits == 0) return ip.str();
  const BigInt frac_part = s % scale;
  std::string frac = frac_part.str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return ip.str() + "." + frac;
}

}  // namespace ppdim
