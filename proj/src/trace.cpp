#include "btinv/trace.hpp"

#include <stdexcept>

namespace btinv {

TraceEngine::TraceEngine(Algebra algebra, Frac a, Frac b, TiePartner partner)
    : algebra_(std::move(algebra)), a_(std::move(a)), b_(std::move(b)), partner_(partner) {}

TraceEngine::TraceEngine() : TraceEngine(generic_algebra(), Frac::var(Var::a), Frac::var(Var::b)) {}

Frac TraceEngine::trace(const Elem& x) {
  Frac total;
  for (const auto& [key, c] : x.terms()) total += c * trace_basis(key);
  return total;
}

Frac TraceEngine::trace_basis(const Basis& basis) {
  if (auto it = memo_.find(basis); it != memo_.end()) return it->second;
  Frac value = compute(basis);
  memo_.emplace(basis, value);
  return value;
}

// Trace of an element on n strands whose terms all live in E_{n-1}.
Frac TraceEngine::trace_lowered(const Elem& x) {
  Frac total;
  for (const auto& [key, c] : x.terms()) {
    Basis lower{key.ties.truncated(), key.perm.truncated()};
    total += c * trace_basis(lower);
  }
  return total;
}

int TraceEngine::pick_partner(const std::vector<int>& members) const {
  return partner_ == TiePartner::largest ? members.back() : members.front();
}

Frac TraceEngine::compute(const Basis& basis) {
  const int n = basis.perm.size();
  if (n <= 1) return Frac(1);
  const int last = n - 1;  // 0-based position of the last strand
  const Perm& w = basis.perm;
  const SetPartition& ties = basis.ties;

  if (w(last) == last) {
    if (ties.is_singleton(last)) return trace_basis({ties.truncated(), w.truncated()});
    // E_A = E_{A1} E_{j,last} with E_{j,last} = R_c E_{n-1} R_c^{-1},
    // c = s_{j+1} ... s_{n-2} (1-based generators), so
    // rho(E_A R_w) = b rho(R_c^{-1} R_w E_{A1} R_c).
    int j = pick_partner(ties.block_members(last));
    SetPartition rest = ties.isolate(last);
    Elem x = Elem::one(n);
    for (int i = n - 2; i >= j + 1; --i) x = algebra_.mul_R(x, i, -1);
    x = algebra_.mul_perm(x, w);
    x = algebra_.mul_ties(x, rest);
    for (int i = j + 1; i <= n - 2; ++i) x = algebra_.mul_R(x, i, 1);
    return b_ * trace_lowered(x);
  }

  // w = w' s_{n-1} s_{n-2} ... s_P with w'(last) = last and P = w^{-1}(last)+1,
  // lengths adding up: R_w = R_{w'} R_{n-1} R_{gamma'}, gamma' = s_{n-2}...s_P.
  const int big_p = w.inverse()(last) + 1;
  Perm w_prime = w;
  for (int i = big_p; i <= n - 1; ++i) w_prime = w_prime.times_simple(i);
  // E_A R_{w'} = R_{w'} E_B
  SetPartition b_part = ties.permuted(w_prime.inverse());
  Elem x = Elem::one(n);
  if (!b_part.is_singleton(last)) {
    // E_B = E_{B1} E_{j,last};  E_{j,last} R_{n-1} = R_{n-1} E_{j,last-1}
    int j = pick_partner(b_part.block_members(last));
    b_part = b_part.isolate(last);
    if (j != last - 1) x = algebra_.mul_tie_pair(x, j, last - 1);
  }
  // rho(R_{w'} E_B R_{n-1} [E] Y) = a rho(Y R_{w'} E_B)
  for (int i = n - 2; i >= big_p; --i) x = algebra_.mul_R(x, i, 1);
  x = algebra_.mul_perm(x, w_prime);
  x = algebra_.mul_ties(x, b_part);
  return a_ * trace_lowered(x);
}

}  // namespace btinv
