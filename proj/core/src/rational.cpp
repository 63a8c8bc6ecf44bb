#include "zzlocal/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "zzlocal/errors.hpp"

namespace zzlocal {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
  return ExtReal(Rational::parse(text));
}

const Rational& ExtReal::value() const {
  if (infinite_) throw std::logic_error("ExtReal: value() of infinity");
  return value_;
}

ExtReal scale(const Rational& weight, const ExtReal& x) {
  if (x.is_infinite()) return x;
  return ExtReal(weight * x.value());
}

}  // namespace zzlocal
