#pragma once

// Exact integer and rational arithmetic.
//
// Integer and Rational are immutable-by-convention value types backed by GMP.
// Rationals are always stored reduced with a positive denominator, so
// equality is structural.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sqdiff {

class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    const std::uint64_t w = v;
    mpz_import(v_.get_mpz_t(), 1, 1, sizeof w, 0, 0, &w);
  }
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws Error(Parse).
  static Integer parse(std::string_view text);

  std::string to_string() const { return v_.get_str(10); }
  const mpz_class& raw() const noexcept { return v_; }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;  // throws Error(Domain) when it does not fit
  std::size_t bit_length() const noexcept { return sign() == 0 ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  /// Truncating division; throws Error(Domain) on a zero divisor.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

 private:
  mpz_class v_;
};

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Exact quotient; throws Error(Internal) if b does not divide a.
Integer divexact(const Integer& a, const Integer& b);

/// floor(sqrt(n)). Throws Error(Domain) for n < 0.
Integer isqrt(const Integer& n);

/// Cheap necessary condition for n >= 0 to be a square: n must be a
/// quadratic residue modulo 64, 63, 65 and 11. A false result is a proof
/// that n is not a square.
bool passes_square_filter(const Integer& n);

/// The square root of n when n is a perfect square, nothing otherwise
/// (always nothing for negative n).
std::optional<Integer> exact_sqrt(const Integer& n);
inline bool is_perfect_square(const Integer& n) { return exact_sqrt(n).has_value(); }

class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : Rational(Integer(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(Domain) when den == 0.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v);

  /// Accepts "n" or "n/d" with an optional sign on the numerator only.
  static Rational parse(std::string_view text);

  Integer num() const { return Integer(mpz_class(v_.get_num())); }
  Integer den() const { return Integer(mpz_class(v_.get_den())); }
  /// Canonical "num/den" form; the denominator is always printed.
  std::string to_string() const;
  const mpq_class& raw() const noexcept { return v_; }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  Rational inverse() const;  // throws Error(Domain) on zero

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

 private:
  mpq_class v_;
};

Rational abs(const Rational& v);
Rational square(const Rational& v);

/// Nonnegative exact square root when numerator and denominator are both
/// perfect squares.
std::optional<Rational> rat_sqrt(const Rational& r);

}  // namespace sqdiff
