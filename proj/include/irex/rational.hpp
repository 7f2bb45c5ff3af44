#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator, plus a
// +/-infinity extension used for unbounded placement ranges.

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irex {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
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
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  // Accepts "p" or "p/q" with optional leading minus on p.
  static std::optional<Rational> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::int64_t num = 0, den = 1;
    if (!parse_int(num_part, num)) return std::nullopt;
    if (slash != std::string_view::npos) {
      std::string_view den_part = text.substr(slash + 1);
      if (!parse_int(den_part, den) || den == 0) return std::nullopt;
    }
    return Rational(num, den);
  }

 private:
  using i128 = __int128;

  static bool parse_int(std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      i = 1;
      if (s.size() == 1) return false;
    }
    i128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
      v = v * 10 + (s[i] - '0');
      if (v > i128(INT64_MAX)) return false;
    }
    out = neg ? -std::int64_t(v) : std::int64_t(v);
    return true;
  }

  static Rational make(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > i128(INT64_MAX) || num < i128(INT64_MIN) || den > i128(INT64_MAX))
      throw std::overflow_error("rational arithmetic overflow");
    Rational r;
    r.num_ = std::int64_t(num);
    r.den_ = std::int64_t(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A rational extended with -inf/+inf endpoints; open placement ranges for
// clique points use these as sentinels.
class Extended {
 public:
  constexpr Extended() = default;
  Extended(Rational v) : tag_(Tag::Finite), value_(v) {}
  static Extended neg_inf() { return Extended(Tag::NegInf); }
  static Extended pos_inf() { return Extended(Tag::PosInf); }

  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_neg_inf() const { return tag_ == Tag::NegInf; }
  bool is_pos_inf() const { return tag_ == Tag::PosInf; }
  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("infinite bound has no value");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != Tag::Finite || a.value_ == b.value_;
  }
  friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.tag_ == b.tag_) return a.tag_ == Tag::Finite && a.value_ < b.value_;
    return rank(a.tag_) < rank(b.tag_);
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

  std::string str() const {
    switch (tag_) {
      case Tag::NegInf: return "-inf";
      case Tag::PosInf: return "+inf";
      default: return value_.str();
    }
  }

 private:
  enum class Tag { NegInf, Finite, PosInf };
  explicit constexpr Extended(Tag t) : tag_(t) {}
  static int rank(Tag t) { return t == Tag::NegInf ? 0 : (t == Tag::Finite ? 1 : 2); }

  Tag tag_ = Tag::Finite;
  Rational value_;
};

}  // namespace irex
