#include "core/rational.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace gromov {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "malformed number: '" + std::string(text) + "'");
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_number(whole);
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    BigInt p = parse_integer(num, text);
    BigInt q = parse_integer(den, text);
    if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
    Rat r(p, q);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
      neg = s.front() == '-';
      s.remove_prefix(1);
      dot -= 1;
    }
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if (!whole.empty() && !all_digits(whole)) bad_number(text);
    if (!frac.empty() && !all_digits(frac)) bad_number(text);
    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) bad_number(text);
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rat r(neg ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
  }

  return Rat(parse_integer(s, text));
}

std::string format_rational(const Rat& value) { return value.get_str(); }

std::string format_bigint(const BigInt& value) { return value.get_str(); }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RepeatedIndex: return "RepeatedIndex";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::ReferenceMismatch: return "ReferenceMismatch";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gromov
