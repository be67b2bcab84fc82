#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "plabic/error.hpp"

namespace plabic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q" with q > 0; integers serialize as "p/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    require(den != 0, ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

/// Decimal rendering with a fixed number of fractional digits; used only at
/// serialization boundaries (SVG), never in predicates.
inline std::string to_decimal(const Rational& r, int digits = 12) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  BigInt scaled = (negative ? -num : num) * scale;
  BigInt q = scaled / den;
  if ((scaled % den) * 2 >= den) q += 1;
  const BigInt whole = q / scale;
  std::string frac = BigInt(q % scale).str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && q != 0 ? "-" : "") + whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace plabic
