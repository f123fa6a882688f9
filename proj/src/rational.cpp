#include "densub/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace densub {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a rational number: '" + whole + "'");
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return compare_fractions(a.num_, a.den_, b.num_, b.den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::string_view s = text;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(s.substr(0, slash), text), parse_int(s.substr(slash + 1), text));
  }
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(s, text));

  std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  bool negative = !whole.empty() && whole.front() == '-';
  if (negative) whole.remove_prefix(1);
  if (frac.size() > 18 || (whole.empty() && frac.empty())) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t w = whole.empty() ? 0 : parse_int(whole, text);
  std::int64_t f = frac.empty() ? 0 : parse_int(frac, text);
  if (w < 0 || f < 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  Rational r = Rational::from_wide(static_cast<__int128>(w) * den + f, den);
  return negative ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace densub
