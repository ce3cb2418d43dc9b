// The two-parameter algebra of braids and ties E_n(u, v).
//
// Elements are finite combinations of normal-form terms E_A R_w, where A
// is a set partition of the strand positions (a product of generalized ties)
// and R_w is the braid generator product along a reduced word of w.
// All products are computed by right multiplication with generators:
//
//   E_A R_w * E_i  = E_{A v {w(i-1), w(i)}} R_w
//   E_A R_w * R_i  = E_A R_{w s_i}                           if w(i-1) < w(i)
//                  = E_A R_w' + (u-1) E_{A v P} R_w'
//                    + (v-1) E_{A v P} R_w,   w' = w s_i, P = {w(i-1), w(i)}
//   R_i^{-1}       = R_i + (1-v)u^{-1} E_i + (u^{-1}-1) E_i R_i
//
// The tie transport R_w E_{p,q} = E_{w(p), w(q)} R_w is the action
// consistent with the monoid relation  eta_i sigma_j sigma_i =
// sigma_j sigma_i eta_j  (|i-j| = 1).
//
// The coefficient ring K is Frac, or DeltaExt for the isomorphism check.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "btinv/delta_ext.hpp"
#include "btinv/frac.hpp"
#include "btinv/set_partition.hpp"
#include "btinv/tiedbraid.hpp"

namespace btinv {

struct Basis {
  SetPartition ties;
  Perm perm;
  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

template <typename K>
class AlgebraElem {
 public:
  using Terms = std::map<Basis, K>;

  AlgebraElem() = default;
  explicit AlgebraElem(int strands) : strands_(strands) {}

  static AlgebraElem one(int strands) { return basis(SetPartition(strands), Perm(strands), K(1L)); }
  static AlgebraElem basis(const SetPartition& ties, const Perm& perm, K coeff) {
    AlgebraElem x(perm.size());
    x.add_term(Basis{ties, perm}, std::move(coeff));
    return x;
  }

  int strands() const { return strands_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Basis& key, const K& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElem& operator+=(const AlgebraElem& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key, c);
    return *this;
  }
  AlgebraElem& operator-=(const AlgebraElem& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
    return *this;
  }
  AlgebraElem& operator*=(const K& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= c;
    return *this;
  }
  friend AlgebraElem operator+(AlgebraElem x, const AlgebraElem& y) { return x += y; }
  friend AlgebraElem operator-(AlgebraElem x, const AlgebraElem& y) { return x -= y; }
  friend AlgebraElem operator*(AlgebraElem x, const K& c) { return x *= c; }
  friend AlgebraElem operator*(const K& c, AlgebraElem x) { return x *= c; }
  friend bool operator==(const AlgebraElem& x, const AlgebraElem& y) { return (x - y).is_zero(); }

  /// Same element viewed at a larger strand count.
  AlgebraElem extended(int new_strands) const {
    AlgebraElem r(new_strands);
    for (const auto& [key, c] : terms_) {
      r.terms_.emplace(Basis{key.ties.extended(new_strands), key.perm.extended(new_strands)}, c);
    }
    return r;
  }

  /// Maps every coefficient (e.g. substitution); zero results are dropped.
  template <typename F>
  AlgebraElem map_coefficients(F&& f) const {
    AlgebraElem r(strands_);
    for (const auto& [key, c] : terms_) r.add_term(key, f(c));
    return r;
  }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.render() + "] E" + key.ties.render() + " R" + key.perm.render();
    }
    return out;
  }

 private:
  int strands_ = 0;
  Terms terms_;
};

template <typename K>
class BtAlgebra {
 public:
  using Elem = AlgebraElem<K>;

  BtAlgebra(K u, K v)
      : u_(std::move(u)),
        v_(std::move(v)),
        u_minus_one_(u_ - K(1L)),
        v_minus_one_(v_ - K(1L)) {
    K u_inv = inverse_of(u_);
    inv_tie_ = (K(1L) - v_) * u_inv;
    inv_tie_braid_ = u_inv - K(1L);
  }

  const K& u() const { return u_; }
  const K& v() const { return v_; }

  /// x * E_i, 1 <= i <= n-1.
  Elem mul_E(const Elem& x, int i) const {
    check_index(x, i);
    Elem r(x.strands());
    for (const auto& [key, c] : x.terms()) {
      r.add_term(Basis{key.ties.join_pair(key.perm(i - 1), key.perm(i)), key.perm}, c);
    }
    return r;
  }

  /// x * E_{p,q} for 0-based positions p != q (a generalized tie).
  Elem mul_tie_pair(const Elem& x, int p, int q) const {
    Elem r(x.strands());
    for (const auto& [key, c] : x.terms()) {
      r.add_term(Basis{key.ties.join_pair(key.perm(p), key.perm(q)), key.perm}, c);
    }
    return r;
  }

  /// x * E_B for a partition B of the positions.
  Elem mul_ties(const Elem& x, const SetPartition& b) const {
    if (b.is_discrete()) return x;
    Elem r(x.strands());
    for (const auto& [key, c] : x.terms()) {
      r.add_term(Basis{key.ties.join(b.permuted(key.perm)), key.perm}, c);
    }
    return r;
  }

  /// x * R_i^{sign}.
  Elem mul_R(const Elem& x, int i, int sign = 1) const {
    check_index(x, i);
    if (sign < 0) {
      Elem tied = mul_E(x, i);
      Elem r = mul_R(x, i, 1);
      r += tied * inv_tie_;
      r += mul_R(tied, i, 1) * inv_tie_braid_;
      return r;
    }
    Elem r(x.strands());
    for (const auto& [key, c] : x.terms()) {
      Perm next = key.perm.times_simple(i);
      if (key.perm.ascends_at(i)) {
        r.add_term(Basis{key.ties, next}, c);
      } else {
        SetPartition joined = key.ties.join_pair(next(i - 1), next(i));
        r.add_term(Basis{key.ties, next}, c);
        r.add_term(Basis{joined, next}, c * u_minus_one_);
        r.add_term(Basis{joined, key.perm}, c * v_minus_one_);
      }
    }
    return r;
  }

  /// x * R_w along a reduced word of w.
  Elem mul_perm(const Elem& x, const Perm& w) const {
    Elem r = x;
    for (int i : w.reduced_word()) r = mul_R(r, i, 1);
    return r;
  }

  /// x * y.
  Elem mul(const Elem& x, const Elem& y) const {
    Elem r(x.strands());
    for (const auto& [key, c] : y.terms()) {
      Elem part = mul_perm(mul_ties(x, key.ties), key.perm);
      r += part * c;
    }
    return r;
  }

  /// x * (letter), with Sig -> R_i^{+-1} and Tie -> E_i.
  Elem mul_letter(const Elem& x, const Letter& l) const {
    return l.is_tie() ? mul_E(x, l.index) : mul_R(x, l.index, l.sign);
  }

  /// Image of a tied braid word (no sqrt(c) scaling): product of its
  /// letters followed by the top ties.
  Elem from_word(const TiedBraidWord& w) const {
    w.validate();
    Elem r = Elem::one(w.strands);
    for (const auto& l : w.letters) r = mul_letter(r, l);
    if (w.top_ties) r = mul_ties(r, *w.top_ties);
    return r;
  }

 private:
  static void check_index(const Elem& x, int i) {
    if (i < 1 || i > x.strands() - 1) {
      throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " +
                              std::to_string(x.strands()) + " strands");
    }
  }
  static K inverse_of(const K& x) { return x.inverse(); }

  K u_, v_;
  K u_minus_one_, v_minus_one_;
  K inv_tie_;        // (1 - v) / u
  K inv_tie_braid_;  // 1/u - 1
};

using Algebra = BtAlgebra<Frac>;
using Elem = AlgebraElem<Frac>;
using DeltaAlgebra = BtAlgebra<DeltaExt>;
using DeltaElem = AlgebraElem<DeltaExt>;

/// E_n(u, v) with generic parameters.
const Algebra& generic_algebra();
/// E_n(u, v) at given parameter values (e.g. v = 1).
Algebra specialized_algebra(const Bindings& bindings);

Elem substitute(const Elem& x, const Bindings& bindings);

}  // namespace btinv
