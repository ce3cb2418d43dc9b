#include "btinv/frac.hpp"

#include <vector>

namespace btinv {

Frac::Frac(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  normalize();
}

void Frac::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1L);
    return;
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.is_one()) {
    num_ = num_.div_monomial(g);
    den_ = den_.div_monomial(g);
  }
  BigInt c = den_.integer_content();
  BigInt nc = num_.integer_content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), nc.get_mpz_t());
  if (den_.leading().coeff < 0) c = -c;
  if (c != 1) {
    num_ = num_.div_integer(c);
    den_ = den_.div_integer(c);
  }
}

Frac Frac::operator-() const {
  Frac r = *this;
  r.num_ = -r.num_;
  return r;
}

Frac& Frac::operator+=(const Frac& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = Frac(num_ + rhs.num_, den_, Unchecked{});
  } else if (den_.is_monomial() && rhs.den_.is_monomial()) {
    // Monomial denominators (Laurent polynomials): combine over the lcm.
    const Term& s = den_.leading();
    const Term& t = rhs.den_.leading();
    Monomial g = Monomial::gcd(s.mono, t.mono);
    Monomial lx = t.mono / g;  // multiplier for this
    Monomial ly = s.mono / g;  // multiplier for rhs
    MPoly n = num_.times_monomial(lx).times_integer(t.coeff) +
              rhs.num_.times_monomial(ly).times_integer(s.coeff);
    MPoly d = MPoly::monomial(s.mono * lx, BigInt(s.coeff * t.coeff));
    *this = Frac(std::move(n), std::move(d), Unchecked{});
  } else {
    *this = Frac(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_, Unchecked{});
  }
  return *this;
}

Frac& Frac::operator-=(const Frac& rhs) { return *this += -rhs; }

Frac& Frac::operator*=(const Frac& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Frac();
  if (den_ == rhs.den_ && den_.is_constant() && den_.leading().coeff == 1) {
    *this = Frac(num_ * rhs.num_, den_, Unchecked{});
  } else {
    *this = Frac(num_ * rhs.num_, den_ * rhs.den_, Unchecked{});
  }
  return *this;
}

Frac& Frac::operator/=(const Frac& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  return *this *= rhs.inverse();
}

bool operator==(const Frac& x, const Frac& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

Frac Frac::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Frac(den_, num_, Unchecked{});
}

Frac Frac::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return Frac(num_.pow(e), den_.pow(e), Unchecked{});
}

Frac Frac::cancel(const MPoly& factor) const {
  if (factor.is_constant() || is_zero()) return *this;
  MPoly n = num_, d = den_;
  while (true) {
    auto qn = n.divide_exact(factor);
    if (!qn) break;
    auto qd = d.divide_exact(factor);
    if (!qd) break;
    n = std::move(*qn);
    d = std::move(*qd);
  }
  return Frac(std::move(n), std::move(d), Unchecked{});
}

Frac substitute(const MPoly& p, const Bindings& bindings) {
  // Powers of each bound variable are cached per call.
  std::map<std::pair<Var, int>, Frac> powers;
  auto power = [&](Var x, int e) -> const Frac& {
    auto key = std::make_pair(x, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, bindings.at(x).pow(e)).first->second;
  };
  Frac result;
  for (const auto& t : p.terms()) {
    Monomial kept;
    Frac factor(1L);
    for (int k = 0; k < kNumVars; ++k) {
      Var x = static_cast<Var>(k);
      int e = t.mono.exponent(x);
      if (e == 0) continue;
      if (bindings.count(x)) {
        factor *= power(x, e);
      } else {
        kept = kept * Monomial::of(x, e);
      }
    }
    result += factor * Frac(MPoly::monomial(kept, t.coeff));
  }
  return result;
}

Frac Frac::substitute(const Bindings& bindings) const {
  Frac d = btinv::substitute(den_, bindings);
  if (d.is_zero()) {
    throw ArithmeticError("denominator " + den_.render() + " vanishes under substitution");
  }
  return btinv::substitute(num_, bindings) / d;
}

std::string Frac::render() const { return "(" + num_.render() + ")/(" + den_.render() + ")"; }

}  // namespace btinv
