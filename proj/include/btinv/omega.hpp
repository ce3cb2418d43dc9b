// The v = 1 specialization of the tied-link invariant.
//
// At v = 1 the scaling factor is c = 1/u, so sqrt(u) = 1/sqrt(c) and values
// stay in the same quadratic extension as the generic invariant.  The value
// only depends on the number m of components and the weighted c-linking
// graph, and is the explicit sum over edge subsets S:
//
//   sum_S  prod_{e not in S} u^{-l(e)} prod_{e in S} (1 - u^{-l(e)})
//          * (sqrt(u)/a)^{m-1} * b^{m - h(S)},
//
// h(S) the number of connected components of the class graph restricted
// to S.
//
// The module also checks the skein rules of the invariant at a crossing.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "btinv/invariants.hpp"

namespace btinv {

struct OmegaSummary {
  int m = 0;  // components
  int k = 0;  // classes
  int p = 0;  // class pairs with nonzero c-linking number
  std::vector<GraphEdge> edges;
  Scalar value;
};

/// The radicand c at v = 1, i.e. 1/u.
const Frac& omega_radicand();
/// sqrt(u) in the v = 1 extension.
Scalar sqrt_u();

OmegaSummary omega_fast(const TiedBraidWord& w);
/// Same value for already-computed linking data.
OmegaSummary omega_from_graph(int m, const CLinkingGraph& graph);

struct OmegaExponents {
  int r = 0;    // exponent of a
  int s_b = 0;  // least exponent of b
  int inferred_m = 0;
  int inferred_k = 0;
};

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the a- and b-exponents off a value.  Throws StructureError if
/// the a-exponent is not unique.
OmegaExponents omega_exponents(const Scalar& value);
inline OmegaExponents omega_exponents(const OmegaSummary& x) { return omega_exponents(x.value); }

enum class SkeinRule {
  III,        // generic skein rule
  IV,         // with the two strands tied
  Va,
  Vb,
  II,         // adding a free unknot divides by a sqrt(c)
  tiedII,     // adding an unknot tied to the last strand multiplies by b/(a sqrt(c))
  omegaIV,    // v = 1 skein rule
  qp,         // v = 1: L_{+,~} and L_{-,~} agree
  omegaII,    // v = 1: free unknot gives sqrt(u)/a
  omegaIII,   // v = 1: tied unknot gives b sqrt(u)/a
};

inline constexpr SkeinRule kAllSkeinRules[] = {SkeinRule::III, SkeinRule::IV,      SkeinRule::Va,
                                               SkeinRule::Vb,  SkeinRule::II,      SkeinRule::tiedII,
                                               SkeinRule::omegaIV, SkeinRule::qp,  SkeinRule::omegaII,
                                               SkeinRule::omegaIII};

const char* skein_rule_name(SkeinRule r);
/// Parses the name printed by skein_rule_name.
SkeinRule parse_skein_rule(const std::string& name);
/// Whether the rule is about a crossing (as opposed to adding an unknot).
bool is_crossing_rule(SkeinRule r);

/// The five diagrams around a crossing.
struct SkeinDiagrams {
  TiedBraidWord plus, minus, tied, plus_tied, minus_tied;
};
/// Throws ValidationError if letters[pos] is not a crossing.
SkeinDiagrams skein_diagrams(const TiedBraidWord& w, std::size_t pos);

/// Evaluates skein identities with shared trace memos (generic and v = 1).
class SkeinChecker {
 public:
  SkeinChecker();
  /// For crossing rules pos must index a crossing; other rules ignore it.
  bool check(const TiedBraidWord& w, std::size_t pos, SkeinRule rule);

  Evaluator& generic() { return generic_; }
  Evaluator& at_v1() { return omega_; }

 private:
  Evaluator generic_;
  Evaluator omega_;
};

bool skein_check(const TiedBraidWord& w, std::size_t pos, SkeinRule rule);

}  // namespace btinv
