// The ring K[z] / (u(z+1)^2 - (v-1)(z+1) - 1), with K = Frac in u, v.
//
// The class of z is the formal root delta used to pass between the
// two-parameter generators R_i and one-parameter generators T_i.  Expanding
// the minimal polynomial gives the reduction rule
//     z^2 = ((v - 1 - 2u) z + (v - u)) / u.

#pragma once

#include <string>

#include "btinv/frac.hpp"

namespace btinv {

class DeltaExt {
 public:
  DeltaExt() = default;
  DeltaExt(long c) : c0_(c) {}                    // NOLINT(google-explicit-constructor)
  DeltaExt(Frac c0) : c0_(std::move(c0)) {}       // NOLINT(google-explicit-constructor)
  DeltaExt(Frac c0, Frac c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  /// The class of z.
  static DeltaExt delta() { return DeltaExt(Frac(), Frac(1)); }
  /// u z^2 + (2u - v + 1) z + (u - v), the expanded minimal polynomial,
  /// evaluated as a polynomial expression (not reduced in advance).
  static DeltaExt minimal_polynomial_at(const DeltaExt& z);

  const Frac& c0() const { return c0_; }
  const Frac& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  DeltaExt operator-() const { return DeltaExt(-c0_, -c1_); }
  DeltaExt& operator+=(const DeltaExt& rhs);
  DeltaExt& operator-=(const DeltaExt& rhs);
  DeltaExt& operator*=(const DeltaExt& rhs);
  friend DeltaExt operator+(DeltaExt x, const DeltaExt& y) { return x += y; }
  friend DeltaExt operator-(DeltaExt x, const DeltaExt& y) { return x -= y; }
  friend DeltaExt operator*(DeltaExt x, const DeltaExt& y) { return x *= y; }
  friend bool operator==(const DeltaExt& x, const DeltaExt& y) {
    return x.c0_ == y.c0_ && x.c1_ == y.c1_;
  }

  /// Inverse via the conjugate root; throws ArithmeticError on zero norm.
  DeltaExt inverse() const;
  DeltaExt substitute(const Bindings& bindings) const {
    return DeltaExt(c0_.substitute(bindings), c1_.substitute(bindings));
  }

  std::string render() const { return c0_.render() + " + " + c1_.render() + "*z"; }

 private:
  Frac c0_;
  Frac c1_;
};

}  // namespace btinv
