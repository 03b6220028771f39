#include "mahlerlab/format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace mahlerlab {
namespace {

Integer pow10(long e) { return ipow(10, static_cast<unsigned long>(e)); }

// |x| * 10^shift as an exact rational.
Rational scale10(const Rational& x, long shift) {
  Rational r = abs(x);
  if (shift >= 0) {
    r *= Rational(pow10(shift));
  } else {
    r /= Rational(pow10(-shift));
  }
  return r;
}

}  // namespace

int decimal_digits_for(Precision prec) {
  auto d = static_cast<int>(std::ceil(static_cast<double>(prec) * 0.30102999566398120)) + 1;
  return std::clamp(d, 17, 60);
}

DecimalText to_scientific(const Rational& x, int digits, Round mode) {
  if (sgn(x) == 0) return {"0", Rational(0)};
  const bool negative = sgn(x) < 0;
  // Rounding the magnitude: toward +inf for positive x means up, etc.
  bool round_magnitude_up = false;
  switch (mode) {
    case Round::kCeil: round_magnitude_up = !negative; break;
    case Round::kFloor: round_magnitude_up = negative; break;
    case Round::kTruncate: round_magnitude_up = false; break;
  }
  long e10 = static_cast<long>(std::floor(log_abs(x) / std::log(10.0)));
  Integer n;
  const Integer lo = pow10(digits - 1);
  const Integer hi = pow10(digits);
  for (int guard = 0; guard < 8; ++guard) {
    Rational scaled = scale10(x, digits - 1 - e10);
    n = round_magnitude_up ? ceil_of(scaled) : floor_of(scaled);
    if (n >= hi) {
      ++e10;
      continue;
    }
    if (n < lo) {
      --e10;
      continue;
    }
    break;
  }
  std::string digits_text = n.get_str(10);
  std::string text = negative ? "-" : "";
  text += digits_text.substr(0, 1);
  if (digits_text.size() > 1) {
    text += ".";
    text += digits_text.substr(1);
  }
  text += "e" + std::to_string(e10);
  long exp_of_unit = e10 - (digits - 1);
  Rational value = exp_of_unit >= 0 ? Rational(n * pow10(exp_of_unit))
                                    : Rational(n, pow10(-exp_of_unit));
  value.canonicalize();
  if (negative) value = -value;
  return {text, value};
}

bool parse_decimal(const std::string& text, Rational& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return false;
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return false;
    ++i;
    std::string exp_text = text.substr(i);
    if (exp_text.empty()) return false;
    std::size_t j = (exp_text[0] == '-' || exp_text[0] == '+') ? 1 : 0;
    if (j == exp_text.size()) return false;
    for (std::size_t k = j; k < exp_text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(exp_text[k]))) return false;
    }
    exponent = std::stol(exp_text);
  }
  Integer mantissa(digits, 10);
  long shift = exponent - frac_digits;
  Rational r = shift >= 0 ? Rational(mantissa * pow10(shift))
                          : Rational(mantissa, pow10(-shift));
  r.canonicalize();
  out = negative ? Rational(-r) : r;
  return true;
}

}  // namespace mahlerlab
