#include "vtm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vtm {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces in wide arithmetic before narrowing, so intermediate products may
// exceed 64 bits as long as the reduced fraction fits.
Rational reduced(Wide num, Wide den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g == 0) g = 1;
  return Rational(narrow(num / g), narrow(den / g));
}

}  // namespace

Rational::Rational(long long numerator) : num_(numerator), den_(1) {}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Wide num = numerator;
  Wide den = denominator;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g == 0) g = 1;
  num_ = narrow(num / g);
  den_ = narrow(den / g);
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                 Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return reduced(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                 Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return reduced(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = *this + o;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  auto read_int = [&](long long& out) -> bool {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return false;
    long long v = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (v > (INT64_MAX - 9) / 10) return false;
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    out = v;
    return true;
  };
  long long num = 0;
  if (!read_int(num)) return std::nullopt;
  long long den = 1;
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    if (!read_int(den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  return Rational(negative ? -num : num, den);
}

}  // namespace vtm
