#include "catalysis/rational.hpp"

#include "catalysis/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace catalysis {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::InvalidVector: return "InvalidVector";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotIncomparable: return "NotIncomparable";
    case ErrorKind::TieAtSamplePoint: return "TieAtSamplePoint";
    case ErrorKind::TieAtRepresentative: return "TieAtRepresentative";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw CatalysisError(ErrorKind::Parse, "cannot parse '" + std::string(text) + "' as a rational (" + why + ")");
}

Rational parse_integer(std::string_view digits) {
  return Rational(mpz_class(std::string(digits), 10));
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r(p);
  if (exponent < 0) r = 1 / r;
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(text, "empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(text, "fraction must be digits/digits");
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(text, "zero denominator");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      s = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      if (!all_digits(exp_part) || exp_part.size() > 6) fail(text, "bad exponent");
      exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) fail(text, "no digits");
    if (!int_part.empty() && !all_digits(int_part)) fail(text, "bad integer part");
    if (!frac_part.empty() && !all_digits(frac_part)) fail(text, "bad fractional part");
    std::string digits = std::string(int_part) + std::string(frac_part);
    value = parse_integer(digits) * pow10(exponent - static_cast<long>(frac_part.size()));
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display_string(const Rational& value) { return value.get_str(); }

std::string to_decimal_string(const Rational& value, int digits) {
  // Round half up at the requested number of digits.
  Rational scaled = value * pow10(digits);
  mpz_class rounded = scaled.get_num() * 2 + scaled.get_den();
  mpz_class twice_den = scaled.get_den() * 2;
  mpz_fdiv_q(rounded.get_mpz_t(), rounded.get_mpz_t(), twice_den.get_mpz_t());
  bool negative = rounded < 0;
  if (negative) rounded = -rounded;
  std::string s = rounded.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (negative && s != "0") s.insert(0, "-");
  return s;
}

}  // namespace catalysis
