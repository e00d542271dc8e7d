#pragma once

// Exact arithmetic: arbitrary-precision naturals, reduced rationals and the
// few combinatorial primitives the counting code needs.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when a value that must be a non-negative integer is not one.
/// Inside the counting code this always means a bug, never bad input.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision non-negative integer.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
  Natural(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw ArithmeticError("Natural: negative value " + std::to_string(v));
    }
    value_ = v;
  }

  explicit Natural(const BigInt& v) : value_(v) {
    if (value_ < 0) throw ArithmeticError("Natural: negative value " + value_.str());
  }

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Natural parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Natural::parse: empty string");
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("Natural::parse: not a decimal natural: '" + std::string(text) + "'");
      }
    }
    Natural n;
    n.value_ = BigInt(std::string(text));
    return n;
  }

  [[nodiscard]] std::string str() const { return value_.str(); }
  [[nodiscard]] const BigInt& big() const { return value_; }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }

  /// Narrowing conversion; throws when the value does not fit.
  [[nodiscard]] std::uint64_t to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max()) {
      throw ArithmeticError("Natural::to_u64: value exceeds 64 bits: " + str());
    }
    return value_.convert_to<std::uint64_t>();
  }

  Natural& operator+=(const Natural& o) {
    value_ += o.value_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    value_ *= o.value_;
    return *this;
  }
  /// Truncated subtraction is never what we want here: a negative result throws.
  Natural& operator-=(const Natural& o) {
    if (o.value_ > value_) throw ArithmeticError("Natural: subtraction underflow");
    value_ -= o.value_;
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

  /// Exact division; throws if b does not divide a.
  friend Natural exact_div(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw ArithmeticError("Natural: division by zero");
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(a.value_, b.value_, q, r);
    if (!r.is_zero()) throw ArithmeticError("Natural: inexact division " + a.str() + " / " + b.str());
    return Natural(q);
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

 private:
  BigInt value_{0};
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() = default;

  template <std::integral T>
  Ratio(T v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  Ratio(const Natural& n) : value_(n.big()) {}  // NOLINT(google-explicit-constructor)

  explicit Ratio(const BigInt& v) : value_(v) {}

  Ratio(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw ArithmeticError("Ratio: zero denominator");
    // boost 1.74 rejects a negative denominator here
    value_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
  }

  [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  [[nodiscard]] bool is_integer() const { return denominator() == 1; }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] int sign() const { return value_.sign(); }

  /// Converts to a Natural; throws when the value is fractional or negative.
  [[nodiscard]] Natural to_natural() const {
    if (!is_integer()) throw ArithmeticError("Ratio: expected an integer, got " + str());
    return Natural(numerator());
  }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Ratio& operator+=(const Ratio& o) {
    value_ += o.value_;
    return *this;
  }
  Ratio& operator-=(const Ratio& o) {
    value_ -= o.value_;
    return *this;
  }
  Ratio& operator*=(const Ratio& o) {
    value_ *= o.value_;
    return *this;
  }
  Ratio& operator/=(const Ratio& o) {
    if (o.is_zero()) throw ArithmeticError("Ratio: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(const Ratio& a) { return Ratio() - a; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  BigRational value_{0};
};

/// n!
inline Natural factorial(unsigned n) {
  Natural result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= Natural(k);
  return result;
}

/// C(n, k), zero outside 0 <= k <= n.
inline Natural binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Natural(0);
  if (k > n - k) k = n - k;
  // Running product stays integral: C(n-k+i, i) at every step.
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return Natural(acc);
}

/// base^exp by repeated squaring, with 0^0 = 1.
inline Natural pow(Natural base, unsigned exp) {
  Natural result = 1;
  while (exp != 0) {
    if ((exp & 1U) != 0) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

/// base^exp for any integer exponent; 0^0 = 1, 0^(negative) throws.
inline Ratio pow(const Ratio& base, long exp) {
  if (exp < 0) {
    if (base.is_zero()) throw ArithmeticError("Ratio: zero to a negative power");
    return Ratio(1) / pow(base, -exp);
  }
  Ratio result = 1;
  Ratio b = base;
  auto e = static_cast<unsigned long>(exp);
  while (e != 0) {
    if ((e & 1UL) != 0) result *= b;
    e >>= 1UL;
    if (e != 0) b *= b;
  }
  return result;
}

}  // namespace fec

template <>
struct std::hash<fec::Natural> {
  std::size_t operator()(const fec::Natural& n) const noexcept {
    return boost::multiprecision::hash_value(n.big());
  }
};
