#include "bibcredit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bibcredit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

BigInt parse_unsigned(std::string_view digits, std::string_view full) {
  if (!all_digits(digits))
    throw std::invalid_argument("not a number: '" + std::string(full) + "'");
  BigInt out = 0;
  for (char c : digits)
    out = out * 10 + (c - '0');
  return out;
}

// Strips an optional leading sign, returns -1 or +1.
int take_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    int sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
    return sign;
  }
  return 1;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  int sign = take_sign(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    BigInt num = parse_unsigned(s, text);
    return sign < 0 ? Rational(-num) : Rational(num);
  }
  BigInt num = parse_unsigned(s.substr(0, slash), text);
  BigInt den = parse_unsigned(s.substr(slash + 1), text);
  if (den == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  return sign < 0 ? -r : r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  int sign = take_sign(s);
  auto dot = s.find('.');
  std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
  BigInt num = whole.empty() ? BigInt(0) : parse_unsigned(whole, text);
  BigInt den = 1;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  return sign < 0 ? -r : r;
}

std::string format_ratio_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_decimal(const Rational& value, int places) {
  if (places < 0)
    throw std::invalid_argument("negative decimal places");
  const bool negative = value < 0;
  BigInt num = boost::multiprecision::abs(numerator(value));
  BigInt den = denominator(value);
  BigInt scale = 1;
  for (int i = 0; i < places; ++i)
    scale *= 10;
  // round half away from zero on the absolute value
  BigInt scaled = num * scale;
  BigInt quotient = scaled / den;
  BigInt remainder = scaled % den;
  if (remainder * 2 >= den)
    ++quotient;
  std::string digits = quotient.str();
  std::string out;
  if (negative && quotient != 0)
    out += '-';
  if (places == 0) {
    out += digits;
    return out;
  }
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, 1, '.');
  out += digits;
  return out;
}

} // namespace bibcredit
