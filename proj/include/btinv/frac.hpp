// Fractions of polynomials in u, v, a, b (and the auxiliary q).
//
// Fractions are reduced only by integer content and by common monomial
// factors; equality is decided by cross-multiplication, so two Fracs can
// be equal without being structurally identical.

#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "btinv/mpoly.hpp"

namespace btinv {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Frac;
using Bindings = std::map<Var, Frac>;

class Frac {
 public:
  Frac() : num_(), den_(1L) {}
  Frac(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Frac(MPoly num) : num_(std::move(num)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  /// Throws ArithmeticError if den is zero.
  Frac(MPoly num, MPoly den);

  static Frac var(Var x) { return Frac(MPoly::var(x)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Frac operator-() const;
  Frac& operator+=(const Frac& rhs);
  Frac& operator-=(const Frac& rhs);
  Frac& operator*=(const Frac& rhs);
  Frac& operator/=(const Frac& rhs);
  friend Frac operator+(Frac x, const Frac& y) { return x += y; }
  friend Frac operator-(Frac x, const Frac& y) { return x -= y; }
  friend Frac operator*(Frac x, const Frac& y) { return x *= y; }
  friend Frac operator/(Frac x, const Frac& y) { return x /= y; }
  friend bool operator==(const Frac& x, const Frac& y);

  /// Throws ArithmeticError for zero.
  Frac inverse() const;
  /// Integer power; negative exponents invert.
  Frac pow(int e) const;

  /// Divides numerator and denominator by `factor` as long as both are
  /// divisible.  Does not change the value.
  Frac cancel(const MPoly& factor) const;

  /// Replaces each bound variable by its Frac.  Throws ArithmeticError
  /// naming the denominator if it vanishes identically.
  Frac substitute(const Bindings& bindings) const;

  /// "(num)/(den)".
  std::string render() const;

 private:
  struct Unchecked {};
  Frac(MPoly num, MPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  void normalize();

  MPoly num_;
  MPoly den_;
};

/// Evaluates a polynomial under bindings (unbound variables stay symbolic).
Frac substitute(const MPoly& p, const Bindings& bindings);

}  // namespace btinv
