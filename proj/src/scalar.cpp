#include "btinv/scalar.hpp"

namespace btinv {

namespace {

std::shared_ptr<const Frac> generic_radicand() {
  static const auto c = std::make_shared<const Frac>(
      scaling_factor(Frac::var(Var::u), Frac::var(Var::v)));
  return c;
}

std::shared_ptr<const Frac> share(const Frac& radicand) {
  auto generic = generic_radicand();
  if (&radicand == generic.get()) return generic;
  if (radicand.num() == generic->num() && radicand.den() == generic->den()) return generic;
  return std::make_shared<const Frac>(radicand);
}

}  // namespace

const Frac& scaling_factor() { return *generic_radicand(); }

Frac scaling_factor(const Frac& u, const Frac& v) {
  Frac a = Frac::var(Var::a), b = Frac::var(Var::b);
  return (a + b * (Frac(1) - v)) / (a * u);
}

MPoly scaling_numerator() {
  return MPoly::var(Var::a) + MPoly::var(Var::b) - MPoly::var(Var::b) * MPoly::var(Var::v);
}

Scalar::Scalar() : radicand_(generic_radicand()) {}

Scalar::Scalar(Frac even, Frac odd, Frac radicand)
    : even_(std::move(even)), odd_(std::move(odd)), radicand_(share(radicand)) {}

Scalar Scalar::rational(Frac even, Frac radicand) {
  return Scalar(std::move(even), Frac(), std::move(radicand));
}

Scalar Scalar::root(Frac radicand) { return Scalar(Frac(), Frac(1), std::move(radicand)); }

void Scalar::require_same_radicand(const Scalar& other) const {
  if (radicand_ == other.radicand_) return;
  if (!(*radicand_ == *other.radicand_)) {
    throw ArithmeticError("scalars over different radicands: " + radicand_->render() + " vs " +
                          other.radicand_->render());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.even_ = -r.even_;
  r.odd_ = -r.odd_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_radicand(rhs);
  even_ += rhs.even_;
  odd_ += rhs.odd_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_radicand(rhs);
  Frac even = even_ * rhs.even_;
  if (!odd_.is_zero() && !rhs.odd_.is_zero()) even += odd_ * rhs.odd_ * *radicand_;
  Frac odd = even_ * rhs.odd_ + odd_ * rhs.even_;
  even_ = std::move(even);
  odd_ = std::move(odd);
  return *this;
}

Scalar& Scalar::operator*=(const Frac& rhs) {
  even_ *= rhs;
  odd_ *= rhs;
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.radicand_ != y.radicand_ && !(*x.radicand_ == *y.radicand_)) return false;
  return x.even_ == y.even_ && x.odd_ == y.odd_;
}

Scalar Scalar::conjugate() const { return Scalar(even_, -odd_, *radicand_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  // (e + o r)^-1 = (e - o r) / (e^2 - o^2 c)
  Frac norm = even_ * even_ - odd_ * odd_ * *radicand_;
  if (norm.is_zero()) throw ArithmeticError("scalar has zero norm");
  Frac inv = norm.inverse();
  Scalar r = conjugate();
  r *= inv;
  return r;
}

Scalar Scalar::root_power(int k, const Frac& radicand) {
  // sqrt(c)^k = c^floor(k/2) * sqrt(c)^(k mod 2)
  int half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  bool odd = (k - 2 * half) != 0;
  Frac base = radicand.pow(half);
  return odd ? Scalar(Frac(), std::move(base), radicand) : Scalar(std::move(base), Frac(), radicand);
}

Scalar Scalar::substitute(const Bindings& bindings) const {
  Frac c = radicand_->substitute(bindings);
  Frac even = even_.substitute(bindings);
  Frac odd = odd_.substitute(bindings);
  if (c == Frac(1)) return Scalar(even + odd, Frac(), Frac(1));
  return Scalar(std::move(even), std::move(odd), std::move(c));
}

Scalar Scalar::cancel(const MPoly& factor) const {
  Scalar r = *this;
  r.even_ = even_.cancel(factor);
  r.odd_ = odd_.cancel(factor);
  return r;
}

std::string Scalar::render() const { return "even: " + even_.render() + " ; odd: " + odd_.render(); }

}  // namespace btinv
