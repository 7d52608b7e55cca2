#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vtm {

// Exact rational number, always normalized (gcd(num, den) == 1, den > 0).
// Scores stay exact so rankings are deterministic across platforms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long numerator);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "3", "-3" or "3/2".
  std::string str() const;

  // Accepts "N" or "N/D" with optional leading minus; nullopt on anything
  // else (including zero denominators).
  static std::optional<Rational> parse(std::string_view text);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace vtm
