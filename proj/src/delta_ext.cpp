#include "btinv/delta_ext.hpp"

namespace btinv {

namespace {

const Frac& u() {
  static const Frac x = Frac::var(Var::u);
  return x;
}

const Frac& v() {
  static const Frac x = Frac::var(Var::v);
  return x;
}

// z^2 = p1 z + p0
const Frac& square_linear() {
  static const Frac p1 = (v() - Frac(1) - Frac(2) * u()) / u();
  return p1;
}

const Frac& square_constant() {
  static const Frac p0 = (v() - u()) / u();
  return p0;
}

}  // namespace

DeltaExt DeltaExt::minimal_polynomial_at(const DeltaExt& z) {
  DeltaExt sq = z * z;
  return DeltaExt(u()) * sq + DeltaExt(Frac(2) * u() - v() + Frac(1)) * z + DeltaExt(u() - v());
}

DeltaExt& DeltaExt::operator+=(const DeltaExt& rhs) {
  c0_ += rhs.c0_;
  c1_ += rhs.c1_;
  return *this;
}

DeltaExt& DeltaExt::operator-=(const DeltaExt& rhs) {
  c0_ -= rhs.c0_;
  c1_ -= rhs.c1_;
  return *this;
}

DeltaExt& DeltaExt::operator*=(const DeltaExt& rhs) {
  if (c1_.is_zero() && rhs.c1_.is_zero()) {
    c0_ *= rhs.c0_;
    return *this;
  }
  Frac top = c1_ * rhs.c1_;
  Frac c0 = c0_ * rhs.c0_;
  Frac c1 = c0_ * rhs.c1_ + c1_ * rhs.c0_;
  if (!top.is_zero()) {
    c0 += top * square_constant();
    c1 += top * square_linear();
  }
  c0_ = std::move(c0);
  c1_ = std::move(c1);
  return *this;
}

DeltaExt DeltaExt::inverse() const {
  // z + zbar = p1, z * zbar = -p0; (c0 + c1 z)(c0 + c1 zbar) lies in K.
  Frac norm = c0_ * c0_ + c0_ * c1_ * square_linear() - c1_ * c1_ * square_constant();
  if (norm.is_zero()) throw ArithmeticError("zero norm in delta extension");
  Frac inv = norm.inverse();
  // c0 + c1 zbar = (c0 + c1 p1) - c1 z
  return DeltaExt((c0_ + c1_ * square_linear()) * inv, -c1_ * inv);
}

}  // namespace btinv
