// Moves that preserve the closure of a tied braid word: conjugation,
// (de)stabilization, free cancellation, and the tied braid monoid
// relations eta1..eta9 applied as local rewrites in either direction.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "btinv/tiedbraid.hpp"

namespace btinv {

enum class Relation {
  eta1,  // e_i e_j = e_j e_i
  eta2,  // e_i e_i = e_i
  eta3,  // e_i s_i^{+-1} = s_i^{+-1} e_i
  eta4,  // e_i s_j^{+-1} = s_j^{+-1} e_i,  |i-j| > 1
  eta5,  // e_i s_j s_i = s_j s_i e_j,  |i-j| = 1
  eta6,  // e_i e_j s_i = e_j s_i e_j = s_i e_i e_j,  |i-j| = 1
  eta7,  // s_i s_j = s_j s_i,  |i-j| > 1 (any signs)
  eta8,  // s_i s_j s_i = s_j s_i s_j,  |i-j| = 1 (all +1 or all -1)
  eta9,  // e_i s_j s_i^-1 = s_j s_i^-1 e_j,  |i-j| = 1
  free,  // s_i^{+-1} s_i^{-+1} = (empty)
};

inline constexpr Relation kAllRelations[] = {Relation::eta1, Relation::eta2, Relation::eta3, Relation::eta4,
                                             Relation::eta5, Relation::eta6, Relation::eta7, Relation::eta8,
                                             Relation::eta9, Relation::free};

const char* relation_name(Relation r);

struct Move {
  enum class Kind { conjugate, stabilize, destabilize, relation, insert_pair };
  Kind kind = Kind::conjugate;
  int index = 1;      // conjugate / insert_pair generator
  int sign = 1;       // conjugate / stabilize / insert_pair sign
  Relation relation = Relation::eta1;
  std::size_t position = 0;  // relation / insert_pair position in the word
  bool forward = true;       // relation direction (lhs -> rhs)
  int variant = 0;           // sign / side selector, see relation_side

  static Move conjugate(int i, int sign) { return {Kind::conjugate, i, sign}; }
  static Move stabilize(int sign) { return {Kind::stabilize, 0, sign}; }
  static Move destabilize() { return {Kind::destabilize}; }
  static Move rewrite(Relation r, std::size_t pos, bool forward = true, int variant = 0) {
    return {Kind::relation, 0, 1, r, pos, forward, variant};
  }
  static Move insert_pair(std::size_t pos, int i, int sign) {
    return {Kind::insert_pair, i, sign, Relation::free, pos, false};
  }
  std::string render() const;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Applies a move; throws MoveError when the pattern does not match or the
/// move is not applicable.
///   conjugate(i, s):  w -> s_i^{-s} w s_i^{s}   (top ties permuted by s_i)
///   stabilize(s):     (n, w) -> (n+1, w s_n^{s})
///   destabilize:      inverse of stabilize when s_{n-1} occurs only last
TiedBraidWord markov_move(const TiedBraidWord& w, const Move& move);

/// Every relation rewrite that applies to w, in both directions.
std::vector<Move> applicable_rewrites(const TiedBraidWord& w);

/// Number of variants of a relation.  Variants select signs (eta3, eta4,
/// eta7, eta8, free) or which two of the three eta6 expressions are equated
/// (0: first = second, 1: second = third, 2: first = third).
int relation_variants(Relation r);

/// Whether (i, j) is a valid index pair for the relation on n strands
/// (j is ignored for one-index relations).
bool relation_applies(Relation r, int i, int j, int strands);

/// Left or right side of a relation instantiated at i, j.  Throws
/// MoveError for an invalid index pair.
std::vector<Letter> relation_side(Relation r, int i, int j, bool lhs, int variant = 0);

/// Limits for random move sequences.
struct FuzzLimits {
  int max_strands = 5;
  std::size_t max_length = 12;
};

/// A random applicable move within limits (conjugation, stabilization,
/// destabilization, pair insertion, or a relation rewrite).
Move random_move(const TiedBraidWord& w, std::mt19937_64& rng, const FuzzLimits& limits = {});

/// Random word on n strands with `length` letters; ties with probability
/// tie_ratio.
TiedBraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng, double tie_ratio = 0.25);

}  // namespace btinv
