#include "affinekit/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "affinekit/error.hpp"

namespace affinekit {
namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

Rational make(i128 n, i128 d) {
  if (d == 0) throw Error("rational division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw Error("rational overflow");
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || first == ptr) {
    throw ParseError("invalid rational '" + std::string(whole) + "'", 1, 1);
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  if (!fits(nn) || !fits(dd)) throw Error("rational overflow");
  num_ = static_cast<std::int64_t>(nn);
  den_ = static_cast<std::int64_t>(dd);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::int64_t d = parse_int(text.substr(slash + 1), text);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  return Rational(n, d);
}

Rational Rational::operator-() const { return make(-i128(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error("rational division by zero");
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 l = i128(a.num_) * b.den_;
  i128 r = i128(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "inf" || text == "+inf") return pos_inf();
  return ExtendedRational(Rational::parse(text));
}

const Rational& ExtendedRational::value() const {
  if (!finite()) throw Error("infinite endpoint has no rational value");
  return value_;
}

ExtendedRational ExtendedRational::operator-() const {
  switch (kind_) {
    case Kind::NegInf:
      return pos_inf();
    case Kind::PosInf:
      return neg_inf();
    default:
      return ExtendedRational(-value_);
  }
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.finite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

std::string ExtendedRational::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    default:
      return value_.str();
  }
}

}  // namespace affinekit
