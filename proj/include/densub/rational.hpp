#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace densub {

/// Exact fraction of two 64-bit integers, always stored reduced with a
/// positive denominator. Intermediate products use 128-bit arithmetic; a
/// result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Parses "12", "-3", "2.5", "7/4".
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Compares a/b with c/d for positive b, d without building Rationals.
inline std::strong_ordering compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c,
                                              std::int64_t d) {
  return static_cast<__int128>(a) * d <=> static_cast<__int128>(c) * b;
}

}  // namespace densub
