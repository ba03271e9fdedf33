#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/rational.hpp"

namespace gromov {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// lowest degree first. The zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(BigInt c);
  static IntPoly monomial(int degree, BigInt c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator*(const IntPoly& other) const;
  IntPoly operator-() const;

  bool operator==(const IntPoly& other) const = default;

  // Exact division; throws InvariantViolation if the remainder is nonzero.
  IntPoly divide_exact(const IntPoly& divisor) const;

  std::string to_string(std::string_view variable = "t") const;
  std::vector<std::string> coeff_strings() const;

 private:
  std::vector<BigInt> coeffs_;
};

// Same shape over exact rationals.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly from_int(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_integral() const;
  IntPoly to_int() const;  // requires is_integral()

  RatPoly operator*(const RatPoly& other) const;
  RatPoly operator-(const RatPoly& other) const;
  bool operator==(const RatPoly& other) const = default;

  // Polynomial long division; divisor must be nonzero.
  struct DivMod;
  DivMod divmod(const RatPoly& divisor) const;
  bool is_divisible_by(const RatPoly& divisor) const;

  std::string to_string(std::string_view variable = "t") const;
  std::vector<std::string> coeff_strings() const;

 private:
  std::vector<Rat> coeffs_;
};

struct RatPoly::DivMod {
  RatPoly quotient, remainder;
};

// Parses products of factors like "(t+2)t^4", "(t^2+t-1)^2t",
// "(t+1)^2*t^3", "(t-2)(t^2+2*t+2)t^3". Whitespace and '*' separators are
// optional. Used for the embedded reference-table strings.
IntPoly parse_factored_poly(std::string_view text);

// Best-effort factored rendering over the integers: pulls out sign, powers
// of t, then trial-divides by small linear and quadratic integer factors.
// Whatever remains is printed unfactored. The coefficient list stays the
// ground truth; this is display only.
std::string factored_display(const IntPoly& p);
std::string factored_display(const RatPoly& p);

}  // namespace gromov
