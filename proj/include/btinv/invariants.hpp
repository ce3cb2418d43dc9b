// Link and tied-link invariants from E_n(u, v) via the Jones recipe:
//
//   Upsilon(L) = (a sqrt(c))^{1-n} * sqrt(c)^e * rho(image of the word),
//
// e the exponent sum, so every crossing contributes sqrt(c) R_i^{+-1}.
// Specializations: Delta (v := u), Theta (u := 1), Omega (v := 1).

#pragma once

#include <string>

#include "btinv/scalar.hpp"
#include "btinv/tiedbraid.hpp"
#include "btinv/trace.hpp"

namespace btinv {

enum class Specialization { none, delta, theta, omega };

const char* specialization_name(Specialization s);
/// Bindings realizing a specialization.  With theta_q, Theta additionally
/// re-parametrizes v := q - 1/q + 1.
Bindings specialization_bindings(Specialization s, bool theta_q = false);

struct InvariantValue {
  Scalar value;
  std::string engine;          // "trace" or "omega-graph"
  Specialization specialization = Specialization::none;
  int strands = 0;
  int components = 0;
  int classes = 0;
  friend bool operator==(const InvariantValue& x, const InvariantValue& y) { return x.value == y.value; }
};

/// Evaluates Upsilon with a single trace engine, so the trace memo is
/// shared by every evaluation made through one Evaluator.  Not
/// thread-safe; use one Evaluator per thread.
class Evaluator {
 public:
  /// Parameters of the algebra and trace; empty bindings mean generic
  /// u, v, a, b.
  explicit Evaluator(Bindings params = {}, TiePartner partner = TiePartner::largest);
  explicit Evaluator(Specialization s) : Evaluator(specialization_bindings(s)) {}

  /// Raw Jones-recipe value.
  Scalar upsilon(const TiedBraidWord& w);
  InvariantValue evaluate(const TiedBraidWord& w);

  Frac trace(const Elem& x) { return engine_.trace(x); }
  TraceEngine& engine() { return engine_; }
  const Algebra& algebra() const { return engine_.algebra(); }
  /// The radicand c at these parameters.
  const Frac& radicand() const { return radicand_; }
  Specialization specialization() const { return specialization_; }

 private:
  Bindings params_;
  TraceEngine engine_;
  Frac radicand_;
  MPoly radicand_numerator_;
  Specialization specialization_ = Specialization::none;
};

/// Upsilon with generic parameters (fresh engine).
InvariantValue upsilon(const TiedBraidWord& w);

/// Applies a specialization to a computed generic value.
InvariantValue specialize(const InvariantValue& x, Specialization which, bool theta_q = false);

/// Whether two classical links have equal Homflypt polynomials, decided by
/// comparing Upsilon on their all-tied versions.  Throws ValidationError
/// on tied input.
bool homflypt_equal(const TiedBraidWord& w1, const TiedBraidWord& w2);
bool homflypt_equal(const TiedBraidWord& w1, const TiedBraidWord& w2, Evaluator& evaluator);

}  // namespace btinv
