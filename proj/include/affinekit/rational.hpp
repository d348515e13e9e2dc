#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace affinekit {

// Exact rational in lowest terms with a positive denominator. Arithmetic is
// carried out in 128 bits and throws Error when the reduced result no longer
// fits 64 bits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t n, std::int64_t d);

  // "p/q" or an integer literal, optional leading '-'.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational midpoint(const Rational& a, const Rational& b);

// Rationals extended by -inf and +inf, totally ordered.
class ExtendedRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRational() = default;
  ExtendedRational(Rational q) : kind_(Kind::Finite), value_(q) {}  // NOLINT
  ExtendedRational(std::int64_t n) : ExtendedRational(Rational(n)) {}  // NOLINT

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
  // Rational syntax plus "-inf" / "inf" / "+inf".
  static ExtendedRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  // Throws Error unless finite.
  const Rational& value() const;

  ExtendedRational operator-() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  std::string str() const;

 private:
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

}  // namespace affinekit
