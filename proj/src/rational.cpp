#include "cyclelab/rational.hpp"

#include <cctype>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

BigInt pow10(long exponent) {
  BigInt r = 1;
  for (long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  auto fail = [&] { throw ParameterRejected("not a number: '" + std::string(original) + "'"); };
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  BigInt digits = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      fail();
    }
  }
  if (!any_digit) fail();
  long exponent = 0;
  if (i < text.size()) {
    const std::string_view rest = text.substr(i + 1);
    if (rest.empty() || rest.size() > 6) fail();
    try {
      std::size_t used = 0;
      exponent = std::stol(std::string(rest), &used);
      if (used != rest.size()) fail();
    } catch (const std::logic_error&) {
      fail();
    }
  }
  exponent -= scale;
  Rational r = exponent >= 0 ? Rational(digits * pow10(exponent)) : Rational(digits, pow10(-exponent));
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, text);
  const Rational num = parse_decimal(text.substr(0, slash), text);
  const Rational den = parse_decimal(text.substr(slash + 1), text);
  if (den == 0) throw ParameterRejected("zero denominator: '" + std::string(text) + "'");
  return num / den;
}

BigInt floor_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt f = num / den;
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

BigInt ceil_rational(const Rational& q) {
  const BigInt f = floor_rational(q);
  return Rational(f) == q ? f : BigInt(f + 1);
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace cyclelab
