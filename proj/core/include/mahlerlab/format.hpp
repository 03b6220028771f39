#ifndef MAHLERLAB_FORMAT_HPP
#define MAHLERLAB_FORMAT_HPP

#include <string>

#include "mahlerlab/arith.hpp"
#include "mahlerlab/dyadic.hpp"

namespace mahlerlab {

struct DecimalText {
  std::string text;  // e.g. "-1.2500e-3"
  Rational value;    // exact value of `text`
};

/// Scientific notation with `digits` significant digits, rounded in the
/// given direction so that `value` can serve as a one-sided bound.
DecimalText to_scientific(const Rational& x, int digits, Round mode);

/// Parses plain or scientific decimal text ("0.125", "-3e-7", "1.5E+2")
/// into an exact rational. Returns false on malformed input.
bool parse_decimal(const std::string& text, Rational& out);

/// Significant decimal digits matching a binary precision.
int decimal_digits_for(Precision prec);

}  // namespace mahlerlab

#endif  // MAHLERLAB_FORMAT_HPP
