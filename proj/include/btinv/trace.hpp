// Markov trace on the tower E_1 ⊂ E_2 ⊂ ... with parameters a, b:
//   rho(1) = 1,  rho(XY) = rho(YX),
//   rho(X R_n) = rho(X R_n E_n) = a rho(X),  rho(X E_n) = b rho(X)
// for X, Y in E_n.
//
// Every normal-form term E_A R_w on n strands is rewritten as X G Y with
// X, Y in E_{n-1} and G one of 1, E_{n-1}, R_{n-1}, R_{n-1} E_{n-1};
// conjugation invariance then gives rho(XGY) = rho(YXG), and the rules
// above reduce it to a trace on n-1 strands.

#pragma once

#include <unordered_map>

#include "btinv/btalgebra.hpp"

template <>
struct std::hash<btinv::Basis> {
  std::size_t operator()(const btinv::Basis& b) const noexcept {
    return std::hash<btinv::SetPartition>{}(b.ties) * 31 + std::hash<btinv::Perm>{}(b.perm);
  }
};

namespace btinv {

/// Which member of the last strand's tie block is used to peel the tie.
enum class TiePartner { largest, smallest };

class TraceEngine {
 public:
  TraceEngine(Algebra algebra, Frac a, Frac b, TiePartner partner = TiePartner::largest);
  /// Generic u, v, a, b.
  TraceEngine();

  const Algebra& algebra() const { return algebra_; }
  const Frac& a() const { return a_; }
  const Frac& b() const { return b_; }

  Frac trace(const Elem& x);
  Frac trace_basis(const Basis& basis);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  Frac trace_lowered(const Elem& x);
  Frac compute(const Basis& basis);
  int pick_partner(const std::vector<int>& members) const;

  Algebra algebra_;
  Frac a_, b_;
  TiePartner partner_;
  std::unordered_map<Basis, Frac> memo_;
};

}  // namespace btinv
