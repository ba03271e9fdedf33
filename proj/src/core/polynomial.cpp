#include "core/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "core/errors.hpp"

namespace gromov {

namespace {

template <typename T>
void trim_zeros(std::vector<T>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

template <typename T>
std::string poly_to_string(const std::vector<T>& coeffs, std::string_view var,
                           std::string (*fmt)(const T&)) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const T& c = coeffs[k];
    if (c == 0) continue;
    bool neg = c < 0;
    T mag = neg ? T(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool show_coeff = (k == 0) || mag != 1;
    if (show_coeff) out += fmt(mag);
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_bigint_ref(const BigInt& v) { return v.get_str(); }
std::string format_rat_ref(const Rat& v) { return v.get_str(); }

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim_zeros(coeffs_); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(int degree, BigInt c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(int k) const {
  static const BigInt zero(0);
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const { return *this + (-other); }

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (is_zero() || other.is_zero()) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  RatPoly q = RatPoly::from_int(*this);
  auto dm = q.divmod(RatPoly::from_int(divisor));
  if (!dm.remainder.is_zero() || !dm.quotient.is_integral())
    throw Error(ErrorCode::InvariantViolation, "inexact polynomial division");
  return dm.quotient.to_int();
}

std::string IntPoly::to_string(std::string_view variable) const {
  return poly_to_string<BigInt>(coeffs_, variable, format_bigint_ref);
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim_zeros(coeffs_); }

RatPoly RatPoly::from_int(const IntPoly& p) {
  std::vector<Rat> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Rat(c));
  return RatPoly(std::move(out));
}

const Rat& RatPoly::coeff(int k) const {
  static const Rat zero(0);
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool RatPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c.get_den() == 1; });
}

IntPoly RatPoly::to_int() const {
  if (!is_integral())
    throw Error(ErrorCode::InvariantViolation, "polynomial has non-integer coefficients");
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num());
  return IntPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& other) const {
  if (is_zero() || other.is_zero()) return RatPoly();
  std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& other) const {
  std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return RatPoly(std::move(out));
}

RatPoly::DivMod RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rat> rem = coeffs_;
  int dd = divisor.degree();
  const Rat& lead = divisor.coeffs_.back();
  if (static_cast<int>(rem.size()) - 1 < dd) return {RatPoly(), RatPoly(std::move(rem))};
  std::vector<Rat> quot(rem.size() - static_cast<std::size_t>(dd), Rat(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[static_cast<std::size_t>(k)] == 0) continue;
    Rat f = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = f;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -= f * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

bool RatPoly::is_divisible_by(const RatPoly& divisor) const {
  return divmod(divisor).remainder.is_zero();
}

std::string RatPoly::to_string(std::string_view variable) const {
  return poly_to_string<Rat>(coeffs_, variable, format_rat_ref);
}

std::vector<std::string> RatPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

namespace {

// Recursive-descent parser for products of parenthesized integer
// polynomials in t, bare t factors, and integer constants, each with an
// optional ^exponent. '*' and whitespace between factors are ignored.
class FactoredParser {
 public:
  explicit FactoredParser(std::string_view text) : s_(text) {}

  IntPoly parse() {
    IntPoly result = IntPoly::constant(1);
    skip_ws();
    bool any = false;
    while (!done()) {
      result = result * parse_factor();
      any = true;
      skip_ws();
      if (!done() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
    }
    if (!any) throw Error(ErrorCode::ParseError, "empty polynomial expression");
    return result;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long parse_number() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw Error(ErrorCode::ParseError, "expected a number in '" + std::string(s_) + "'");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  IntPoly parse_base() {
    skip_ws();
    if (done()) throw Error(ErrorCode::ParseError, "unexpected end of polynomial expression");
    if (peek() == '(') {
      ++pos_;
      IntPoly p = parse_sum();
      skip_ws();
      if (done() || peek() != ')')
        throw Error(ErrorCode::ParseError, "missing ')' in '" + std::string(s_) + "'");
      ++pos_;
      return p;
    }
    if (peek() == 't') {
      ++pos_;
      return IntPoly::monomial(1);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return IntPoly::constant(parse_number());
    throw Error(ErrorCode::ParseError,
                "unexpected character '" + std::string(1, peek()) + "' in polynomial");
  }

  IntPoly parse_factor() {
    IntPoly base = parse_base();
    skip_ws();
    if (!done() && peek() == '^') {
      ++pos_;
      skip_ws();
      long e = parse_number();
      IntPoly p = IntPoly::constant(1);
      for (long i = 0; i < e; ++i) p = p * base;
      return p;
    }
    return base;
  }

  // sum of terms inside parentheses: t^2 + 2t - 1, 2*t, ...
  IntPoly parse_sum() {
    IntPoly total;
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (!done() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      BigInt coeff = 1;
      bool have_coeff = false;
      if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_number();
        have_coeff = true;
        skip_ws();
        if (!done() && peek() == '*') {
          ++pos_;
          skip_ws();
        }
      }
      int deg = 0;
      if (!done() && peek() == 't') {
        ++pos_;
        deg = 1;
        skip_ws();
        if (!done() && peek() == '^') {
          ++pos_;
          skip_ws();
          deg = static_cast<int>(parse_number());
        }
      } else if (!have_coeff) {
        throw Error(ErrorCode::ParseError, "expected a term in '" + std::string(s_) + "'");
      }
      total = total + IntPoly::monomial(deg, sign * coeff);
      first = false;
      skip_ws();
      if (done() || (peek() != '+' && peek() != '-')) break;
    }
    return total;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_factored_poly(std::string_view text) { return FactoredParser(text).parse(); }

namespace {

struct Factor {
  IntPoly poly;
  int multiplicity;
};

std::string render_factor(const IntPoly& p, int mult) {
  std::string body = p.degree() == 1 && p.coeff(0) == 0 && p.coeff(1) == 1
                         ? "t"
                         : "(" + p.to_string() + ")";
  if (mult > 1) body += "^" + std::to_string(mult);
  return body;
}

}  // namespace

std::string factored_display(const IntPoly& input) {
  if (input.is_zero()) return "0";
  IntPoly p = input;
  std::string prefix;
  if (p.coeffs().back() < 0) {
    p = -p;
    prefix = "-";
  }

  std::vector<Factor> factors;
  auto divide_out = [&](const IntPoly& f) {
    int mult = 0;
    for (;;) {
      auto dm = RatPoly::from_int(p).divmod(RatPoly::from_int(f));
      if (!dm.remainder.is_zero() || !dm.quotient.is_integral()) break;
      p = dm.quotient.to_int();
      ++mult;
    }
    if (mult > 0) factors.push_back({f, mult});
  };

  divide_out(IntPoly::monomial(1));  // powers of t

  // small linear factors t + c
  for (long c = -64; c <= 64 && p.degree() >= 1; ++c) {
    if (c == 0) continue;
    divide_out(IntPoly(std::vector<BigInt>{BigInt(c), BigInt(1)}));
  }
  // small quadratic factors t^2 + b t + c
  for (long b = -32; b <= 32 && p.degree() >= 2; ++b)
    for (long c = -32; c <= 32 && p.degree() >= 2; ++c) {
      if (c == 0) continue;
      divide_out(IntPoly(std::vector<BigInt>{BigInt(c), BigInt(b), BigInt(1)}));
    }

  std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) {
    if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
    return x.poly.coeffs() < y.poly.coeffs();
  });

  std::vector<std::string> parts;
  if (p.degree() == 0) {
    if (p.coeff(0) != 1 || factors.empty()) parts.push_back(p.coeff(0).get_str());
  }
  for (const auto& f : factors) parts.push_back(render_factor(f.poly, f.multiplicity));
  if (p.degree() > 0) parts.push_back("(" + p.to_string() + ")");

  std::string out = prefix;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " ";
    out += parts[i];
  }
  return out;
}

std::string factored_display(const RatPoly& p) {
  if (p.is_integral()) return factored_display(p.to_int());
  return p.to_string();
}

}  // namespace gromov
