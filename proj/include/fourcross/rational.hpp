// Exact rational scalar used for all coordinates and predicates.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fourcross {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in canonical form:
// denominator > 0, gcd(num, den) == 1, zero is 0/1.
// All comparisons are exact (cross-multiplication, no rounding).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  // Accepts "123", "-4", "0.5", "-1.25", "3/4", "-3/4". No exponents.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  // Exact textual form: integer string when den == 1, "p/q" otherwise.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  // Lossy; rendering and timing summaries only.
  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = compare(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

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
    if (b.num_.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static int compare(const Rational& a, const Rational& b) {
    // Equal denominators cover the all-integer case without multiplying.
    if (a.den_ == b.den_) return a.num_.compare(b.num_);
    return BigInt(a.num_ * b.den_).compare(BigInt(b.num_ * a.den_));
  }

  void normalize() {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
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

  BigInt num_;
  BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };

  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  const auto all_digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  // cpp_int's string constructor reads a leading 0 as an octal prefix, so
  // leading zeros must go before handing the digits over.
  const auto digits_value = [](std::string_view v) {
    const auto nz = v.find_first_not_of('0');
    if (nz == std::string_view::npos) return BigInt(0);
    return BigInt(std::string(v.substr(nz)));
  };

  BigInt num;
  BigInt den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return fail();
    num = digits_value(p);
    den = digits_value(q);
    if (den.is_zero()) return fail();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    num = digits_value(std::string(whole) + std::string(frac));
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
  } else {
    if (!all_digits(s)) return fail();
    num = digits_value(s);
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace fourcross
