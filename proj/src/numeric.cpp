#include "bsgkit/numeric.hpp"

#include "bsgkit/error.hpp"

#include <cctype>
#include <sstream>

namespace bsg {

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(pow(num(base), exponent), pow(den(base), exponent));
}

BigInt pow2(unsigned exponent) {
  BigInt one = 1;
  return one << exponent;
}

BigInt floor(const Rational& q) {
  BigInt n = num(q);
  BigInt d = den(q);
  BigInt quot = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) quot -= 1;
  return quot;
}

BigInt ceil(const Rational& q) {
  BigInt n = num(q);
  BigInt d = den(q);
  BigInt quot = n / d;
  if (n % d != 0 && n > 0) quot += 1;
  return quot;
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  BigInt value{std::string(body)};
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt p = parse_bigint(text.substr(0, slash));
  std::string_view qtext = text.substr(slash + 1);
  if (!all_digits(qtext))
    throw Error(Errc::ParseError, "bad denominator in '" + std::string(text) + "'");
  BigInt q(std::string{qtext});
  if (q == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string approx_decimal(const Rational& q, int digits) {
  BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt n = num(q);
  bool negative = n < 0;
  if (negative) n = -n;
  BigInt scaled = (n * scale * 2 + den(q)) / (den(q) * 2);  // round half up
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string fs = frac.str();
  if (fs.size() < static_cast<std::size_t>(digits)) fs.insert(0, digits - fs.size(), '0');
  std::ostringstream out;
  if (negative && scaled != 0) out << '-';
  out << whole.str();
  if (digits > 0) out << '.' << fs;
  return out.str();
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::EmptySet: return "EmptySet";
    case Errc::UnsupportedGroup: return "UnsupportedGroup";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::EmptyPart: return "EmptyPart";
    case Errc::NoEdges: return "NoEdges";
    case Errc::SameVertex: return "SameVertex";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoWitness: return "NoWitness";
    case Errc::DensityTooLow: return "DensityTooLow";
    case Errc::InfeasibleEpsilon: return "InfeasibleEpsilon";
    case Errc::EpsilonTooLarge: return "EpsilonTooLarge";
    case Errc::UnequalParts: return "UnequalParts";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace bsg
