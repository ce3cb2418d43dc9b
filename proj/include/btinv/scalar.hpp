// Elements even + odd * sqrt(c) of the quadratic extension adjoining a
// formal square root of the scaling factor c = (a + b(1 - v)) / (a u).
//
// A Scalar carries the radicand it was built over.  Generic values use the
// formula above; substitution rewrites the radicand along with both parts,
// so after v := 1 the root squares to 1/u.

#pragma once

#include <memory>
#include <string>

#include "btinv/frac.hpp"

namespace btinv {

/// c = (a + b(1 - v)) / (a u) with generic u, v.
const Frac& scaling_factor();
/// c = (a + b(1 - v)) / (a u) for given u, v.
Frac scaling_factor(const Frac& u, const Frac& v);
/// D = a + b(1 - v), the numerator of c.
MPoly scaling_numerator();

class Scalar {
 public:
  /// Zero over the generic radicand.
  Scalar();
  Scalar(Frac even, Frac odd, Frac radicand);
  static Scalar rational(Frac even, Frac radicand = scaling_factor());
  /// The element sqrt(c) itself.
  static Scalar root(Frac radicand = scaling_factor());

  const Frac& even() const { return even_; }
  const Frac& odd() const { return odd_; }
  const Frac& radicand() const { return *radicand_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator*=(const Frac& rhs);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator*(Scalar x, const Frac& y) { return x *= y; }
  friend Scalar operator*(const Frac& y, Scalar x) { return x *= y; }
  /// Equal radicands and equal parts.
  friend bool operator==(const Scalar& x, const Scalar& y);

  /// (even - odd sqrt(c)).
  Scalar conjugate() const;
  /// Throws ArithmeticError for zero.
  Scalar inverse() const;
  /// sqrt(c)^k as a Scalar over this scalar's radicand.
  static Scalar root_power(int k, const Frac& radicand = scaling_factor());

  /// Substitutes in both parts and in the radicand.  A radicand that
  /// becomes 1 folds the odd part into the even part.
  Scalar substitute(const Bindings& bindings) const;

  /// Cancels powers of `factor` shared by numerator and denominator of
  /// each part.  Value-preserving.
  Scalar cancel(const MPoly& factor) const;

  /// "even: (num)/(den) ; odd: (num)/(den)".
  std::string render() const;

 private:
  void require_same_radicand(const Scalar& other) const;

  Frac even_;
  Frac odd_;
  std::shared_ptr<const Frac> radicand_;
};

}  // namespace btinv
