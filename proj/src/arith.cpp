#include "sqdiff/arith.hpp"

#include <cctype>
#include <string>

#include "sqdiff/errors.hpp"
#include "sqdiff/square_filter.hpp"

namespace sqdiff {

namespace {

bool is_decimal(std::string_view digits) {
  if (digits.empty()) return false;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text, const char* what) {
  throw Error(ErrorKind::Parse, what, "cannot parse '" + std::string(text) + "' as " + what);
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_decimal(digits)) bad_number(text, "integer");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(mpz_class(s, 10));
}

bool Integer::fits_u64() const noexcept {
  return sign() >= 0 && bit_length() <= 64;
}

std::uint64_t Integer::to_u64() const {
  if (!fits_u64()) throw Error(ErrorKind::Domain, "u64", to_string() + " does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof out, 0, 0, v_.get_mpz_t());
  return out;
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "divisor", "division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return Integer(std::move(q));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "divisor", "division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return Integer(std::move(r));
}

Integer abs(const Integer& v) { return Integer(mpz_class(::abs(v.raw()))); }

Integer gcd(const Integer& a, const Integer& b) { return Integer(mpz_class(::gcd(a.raw(), b.raw()))); }

Integer lcm(const Integer& a, const Integer& b) { return Integer(mpz_class(::lcm(a.raw(), b.raw()))); }

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero() || !mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()))
    throw Error(ErrorKind::Internal, "divexact", b.to_string() + " does not divide " + a.to_string());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(q));
}

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw Error(ErrorKind::Domain, "n>=0", "isqrt of negative " + n.to_string());
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.raw().get_mpz_t());
  return Integer(std::move(r));
}

bool passes_square_filter(const Integer& n) {
  if (n.sign() < 0) return false;
  // 2882880 = 64 * 45045
  const unsigned long r = mpz_fdiv_ui(n.raw().get_mpz_t(), 2882880UL);
  return residue::passes(r);
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n.sign() < 0 || !passes_square_filter(n)) return std::nullopt;
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.raw().get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return Integer(std::move(root));
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(ErrorKind::Domain, "den!=0", "zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const std::string_view den = text.substr(slash + 1);
  if (!is_decimal(den)) bad_number(text, "rational");
  const Integer d = Integer::parse(den);
  if (d.is_zero()) throw Error(ErrorKind::Parse, "rational", "zero denominator in '" + std::string(text) + "'");
  return Rational(Integer::parse(text.substr(0, slash)), d);
}

std::string Rational::to_string() const {
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "nonzero", "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "divisor", "division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

Rational square(const Rational& v) { return v * v; }

std::optional<Rational> rat_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = exact_sqrt(r.num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt(r.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace sqdiff
