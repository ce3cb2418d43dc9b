#include "btinv/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace btinv {

namespace {

// Bit positions just above each 12-bit field; a carry or borrow across a
// field boundary shows up there in (x ^ y ^ result).
constexpr std::uint64_t kBoundaryBits = (1ULL << 12) | (1ULL << 24) | (1ULL << 36) |
                                        (1ULL << 48) | (1ULL << 60);

constexpr std::array<Var, kNumVars> kAllVars = {Var::u, Var::v, Var::a, Var::b, Var::q};

}  // namespace

const char* var_name(Var x) {
  switch (x) {
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::a: return "a";
    case Var::b: return "b";
    case Var::q: return "q";
  }
  return "?";
}

Monomial Monomial::of(Var x, int exponent) {
  if (exponent < 0 || exponent > kMaxExponent) {
    throw std::overflow_error("monomial exponent out of range");
  }
  return Monomial(static_cast<std::uint64_t>(exponent) << shift(x));
}

int Monomial::total_degree() const {
  int d = 0;
  for (Var x : kAllVars) d += exponent(x);
  return d;
}

Monomial Monomial::operator*(Monomial other) const {
  std::uint64_t sum = packed_ + other.packed_;
  if (((packed_ ^ other.packed_ ^ sum) & kBoundaryBits) != 0) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return Monomial(sum);
}

Monomial Monomial::operator/(Monomial other) const {
  std::uint64_t diff = packed_ - other.packed_;
  if (packed_ < other.packed_ || ((packed_ ^ other.packed_ ^ diff) & kBoundaryBits) != 0) {
    throw std::domain_error("monomial does not divide");
  }
  return Monomial(diff);
}

bool Monomial::divides(Monomial other) const {
  for (Var x : kAllVars) {
    if (exponent(x) > other.exponent(x)) return false;
  }
  return true;
}

Monomial Monomial::gcd(Monomial x, Monomial y) {
  Monomial g;
  for (Var z : kAllVars) g = g * of(z, std::min(x.exponent(z), y.exponent(z)));
  return g;
}

MPoly::MPoly(long c) : MPoly(BigInt(c)) {}

MPoly::MPoly(BigInt c) {
  if (c != 0) terms_.push_back({Monomial(), std::move(c)});
}

MPoly MPoly::var(Var x, int exponent) { return monomial(Monomial::of(x, exponent)); }

MPoly MPoly::monomial(Monomial m, BigInt c) {
  MPoly p;
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

void MPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.mono > y.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y,
                              Combine combine_sign) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono > x[i].mono) {
      out.push_back({y[j].mono, combine_sign(y[j].coeff)});
      ++j;
    } else {
      BigInt c = x[i].coeff + combine_sign(y[j].coeff);
      if (c != 0) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigInt& c) { return c; });
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigInt& c) { return BigInt(-c); });
  return *this;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  MPoly r;
  if (x.is_zero() || y.is_zero()) return r;
  if (y.terms_.size() == 1) return x.times_monomial(y.terms_[0].mono).times_integer(y.terms_[0].coeff);
  if (x.terms_.size() == 1) return y.times_monomial(x.terms_[0].mono).times_integer(x.terms_[0].coeff);
  r.terms_.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  r.canonicalize();
  return r;
}

bool operator==(const MPoly& x, const MPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].mono != y.terms_[i].mono || x.terms_[i].coeff != y.terms_[i].coeff) return false;
  }
  return true;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  MPoly result(1L);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MPoly MPoly::times_monomial(Monomial m) const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MPoly MPoly::times_integer(const BigInt& c) const {
  if (c == 0) return {};
  MPoly r = *this;
  if (c != 1) {
    for (auto& t : r.terms_) t.coeff *= c;
  }
  return r;
}

MPoly MPoly::div_monomial(Monomial m) const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

MPoly MPoly::div_integer(const BigInt& c) const {
  MPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

BigInt MPoly::integer_content() const {
  BigInt g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  MPoly quotient;
  MPoly rest = *this;
  const Term& lead = divisor.leading();
  // Lex order is a monomial order, so an exact quotient's leading term is
  // LT(rest)/LT(divisor) at every step.
  while (!rest.is_zero()) {
    const Term& top = rest.leading();
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    if (!mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Term step{top.mono / lead.mono, BigInt(top.coeff / lead.coeff)};
    MPoly step_poly = MPoly::monomial(step.mono, step.coeff);
    rest -= divisor * step_poly;
    quotient += step_poly;
  }
  return quotient;
}

int MPoly::degree(Var x) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(x));
  return d;
}

int MPoly::min_degree(Var x) const {
  if (terms_.empty()) return 0;
  int d = Monomial::kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(x));
  return d;
}

std::string MPoly::render() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
    int dx = x->mono.total_degree(), dy = y->mono.total_degree();
    if (dx != dy) return dx > dy;
    return x->mono > y->mono;
  });
  std::ostringstream out;
  bool first = true;
  for (const Term* t : order) {
    BigInt mag = abs(t->coeff);
    bool negative = t->coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || t->mono.is_one()) factors.push_back(mag.get_str());
    for (Var x : kAllVars) {
      int e = t->mono.exponent(x);
      if (e == 0) continue;
      std::string f = var_name(x);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace btinv
