#include "ftag/rational.hpp"

#include <charconv>
#include <limits>

namespace ftag {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw OverflowError();
  return static_cast<std::int64_t>(x);
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw OverflowError();
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw FormatError("rational: malformed literal \"" + std::string(whole) + "\"");
  return value;
}

}  // namespace

Rational Rational::reduced(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational{};
  const __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ZeroDenominatorError();
  return reduced(num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::reduced(
      static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::reduced(
      static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::reduced(static_cast<__int128>(a.num_) * b.num_,
                           static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ZeroDenominatorError();
  return Rational::reduced(static_cast<__int128>(a.num_) * b.den_,
                           static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  return reduced(-static_cast<__int128>(num_), den_);
}

Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::string Rational::str() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) {
    out += '/';
    out += std::to_string(den_);
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw FormatError("rational: empty literal");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rational r;
    r.num_ = parse_int(text, text);
    r.den_ = 1;
    return r;
  }
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part = text.substr(slash + 1);
  if (num_part.empty() || den_part.empty() || den_part.front() == '-' || den_part.front() == '+')
    throw FormatError("rational: malformed literal \"" + std::string(text) + "\"");
  const std::int64_t num = parse_int(num_part, text);
  const std::int64_t den = parse_int(den_part, text);
  if (den == 0) throw ZeroDenominatorError();
  return make(num, den);
}

}  // namespace ftag
