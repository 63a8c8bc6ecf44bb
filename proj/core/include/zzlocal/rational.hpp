#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zzlocal {

/// Exact arbitrary-precision rational, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "-p", "p/q". Throws InputError on anything else or q = 0.
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// A rational or +infinity. Used for deaths of essential classes and for
/// distances that may be unbounded.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExtReal(T n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  static ExtReal infinity() {
    ExtReal e;
    e.infinite_ = true;
    return e;
  }
  /// Accepts everything Rational::parse does, plus "inf".
  static ExtReal parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& r) { return os << r.str(); }

 private:
  Rational value_;
  bool infinite_ = false;
};

/// Rational times extended real, for non-negative weights. 0 * inf is inf.
ExtReal scale(const Rational& weight, const ExtReal& x);

}  // namespace zzlocal
