#include "leadsolve/rational.hpp"

#include <cctype>
#include <ostream>

namespace leadsolve {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_token(std::string_view text, const char* why) {
  throw ParseError("invalid rational '" + std::string(text) + "': " + why);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::from_integer_string(std::string_view digits) {
  mpz_class z;
  if (z.set_str(std::string(digits), 10) != 0) {
    bad_token(digits, "not an integer");
  }
  return Rational(mpq_class(z));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  // Accept the common Unicode minus as well as ASCII '-'.
  bool negative = false;
  if (body.starts_with("\xe2\x88\x92")) {
    negative = true;
    body.remove_prefix(3);
  } else if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_token(text, "empty");

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_token(text, "malformed fraction");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_token(text, "zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
  }

  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_token(text, "malformed decimal");
    if (!whole.empty() && !all_digits(whole)) bad_token(text, "malformed decimal");
    if (!frac.empty() && !all_digits(frac)) bad_token(text, "malformed decimal");
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
  }

  if (!all_digits(body)) bad_token(text, "not a number");
  mpq_class q{mpz_class(std::string(body), 10)};
  if (negative) q = -q;
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace leadsolve
