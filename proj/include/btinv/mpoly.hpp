// Multivariate polynomials with arbitrary-precision integer coefficients.
//
// The variable set is fixed: the algebra parameters u, v, the trace
// parameters a, b, and an auxiliary formal variable q used when a
// specialization is re-parametrized.  Exponents are non-negative; negative
// powers live in the denominator of a Frac.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace btinv {

using BigInt = mpz_class;

enum class Var : std::uint8_t { u = 0, v = 1, a = 2, b = 3, q = 4 };

inline constexpr int kNumVars = 5;

const char* var_name(Var x);

/// Exponent vector packed into 12-bit fields, u in the most significant
/// field.  Integer comparison of the packed word is lexicographic order
/// with u > v > a > b > q.
class Monomial {
 public:
  static constexpr int kBits = 12;
  static constexpr std::uint64_t kFieldMask = (1ULL << kBits) - 1;
  static constexpr int kMaxExponent = static_cast<int>(kFieldMask);

  constexpr Monomial() = default;
  static Monomial of(Var x, int exponent = 1);

  int exponent(Var x) const {
    return static_cast<int>((packed_ >> shift(x)) & kFieldMask);
  }
  int total_degree() const;
  bool is_one() const { return packed_ == 0; }
  std::uint64_t packed() const { return packed_; }

  Monomial operator*(Monomial other) const;
  /// Requires other | *this.
  Monomial operator/(Monomial other) const;
  bool divides(Monomial other) const;
  static Monomial gcd(Monomial x, Monomial y);

  friend bool operator==(Monomial x, Monomial y) = default;
  friend auto operator<=>(Monomial x, Monomial y) = default;

 private:
  static constexpr int shift(Var x) {
    return (kNumVars - 1 - static_cast<int>(x)) * kBits;
  }
  explicit constexpr Monomial(std::uint64_t packed) : packed_(packed) {}
  std::uint64_t packed_ = 0;
};

struct Term {
  Monomial mono;
  BigInt coeff;
};

/// Sparse polynomial; terms are kept sorted by strictly decreasing
/// monomial (lex order) with no zero coefficients, so structural equality
/// is polynomial equality.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MPoly(BigInt c);
  static MPoly var(Var x, int exponent = 1);
  static MPoly monomial(Monomial m, BigInt c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Lex-leading term; requires non-zero.
  const Term& leading() const { return terms_.front(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend bool operator==(const MPoly& x, const MPoly& y);

  MPoly pow(int e) const;
  MPoly times_monomial(Monomial m) const;
  MPoly times_integer(const BigInt& c) const;
  /// Requires m to divide every term.
  MPoly div_monomial(Monomial m) const;
  /// Requires c to divide every coefficient.
  MPoly div_integer(const BigInt& c) const;

  /// gcd of all exponent vectors; the one-monomial for zero.
  Monomial monomial_content() const;
  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  BigInt integer_content() const;

  /// Exact quotient by `divisor`, or nullopt if it does not divide.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  int degree(Var x) const;
  int min_degree(Var x) const;
  bool contains(Var x) const { return degree(x) > 0; }

  /// Terms ordered by total degree, then lex u>v>a>b>q, both descending;
  /// e.g. "u*b - b + 1".
  std::string render() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

}  // namespace btinv
