#include "btinv/markov.hpp"

#include <algorithm>
#include <cstdlib>

namespace btinv {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::eta1: return "eta1";
    case Relation::eta2: return "eta2";
    case Relation::eta3: return "eta3";
    case Relation::eta4: return "eta4";
    case Relation::eta5: return "eta5";
    case Relation::eta6: return "eta6";
    case Relation::eta7: return "eta7";
    case Relation::eta8: return "eta8";
    case Relation::eta9: return "eta9";
    case Relation::free: return "free";
  }
  return "?";
}

std::string Move::render() const {
  switch (kind) {
    case Kind::conjugate: return "conjugate(" + std::to_string(index) + "," + std::to_string(sign) + ")";
    case Kind::stabilize: return "stabilize(" + std::to_string(sign) + ")";
    case Kind::destabilize: return "destabilize";
    case Kind::insert_pair:
      return "insert(" + std::to_string(position) + ",s" + std::to_string(index) + "^" + std::to_string(sign) + ")";
    case Kind::relation:
      return std::string(relation_name(relation)) + (forward ? "->" : "<-") + "@" + std::to_string(position) +
             "/" + std::to_string(variant);
  }
  return "?";
}

int relation_variants(Relation r) {
  switch (r) {
    case Relation::eta3:
    case Relation::eta4:
    case Relation::eta8:
    case Relation::free: return 2;
    case Relation::eta6: return 3;
    case Relation::eta7: return 4;
    default: return 1;
  }
}

namespace {

bool two_index(Relation r) {
  switch (r) {
    case Relation::eta1:
    case Relation::eta4:
    case Relation::eta5:
    case Relation::eta6:
    case Relation::eta7:
    case Relation::eta8:
    case Relation::eta9: return true;
    default: return false;
  }
}

}  // namespace

bool relation_applies(Relation r, int i, int j, int strands) {
  auto in_range = [&](int k) { return k >= 1 && k <= strands - 1; };
  if (!in_range(i)) return false;
  if (!two_index(r)) return true;
  if (!in_range(j)) return false;
  int d = std::abs(i - j);
  switch (r) {
    case Relation::eta1: return d != 0;
    case Relation::eta4:
    case Relation::eta7: return d > 1;
    default: return d == 1;
  }
}

std::vector<Letter> relation_side(Relation r, int i, int j, bool lhs, int variant) {
  if (!relation_applies(r, i, j, kMaxStrands + 1) || variant < 0 || variant >= relation_variants(r)) {
    throw MoveError(std::string("invalid instance of ") + relation_name(r));
  }
  using L = Letter;
  const int s = variant == 0 ? 1 : -1;
  switch (r) {
    case Relation::eta1:
      return lhs ? std::vector{L::tie(i), L::tie(j)} : std::vector{L::tie(j), L::tie(i)};
    case Relation::eta2:
      return lhs ? std::vector{L::tie(i), L::tie(i)} : std::vector{L::tie(i)};
    case Relation::eta3:
      return lhs ? std::vector{L::tie(i), L::sig(i, s)} : std::vector{L::sig(i, s), L::tie(i)};
    case Relation::eta4:
      return lhs ? std::vector{L::tie(i), L::sig(j, s)} : std::vector{L::sig(j, s), L::tie(i)};
    case Relation::eta5:
      return lhs ? std::vector{L::tie(i), L::sig(j), L::sig(i)} : std::vector{L::sig(j), L::sig(i), L::tie(j)};
    case Relation::eta6: {
      const std::vector<std::vector<L>> forms = {{L::tie(i), L::tie(j), L::sig(i)},
                                                 {L::tie(j), L::sig(i), L::tie(j)},
                                                 {L::sig(i), L::tie(i), L::tie(j)}};
      static constexpr int left[] = {0, 1, 0};
      static constexpr int right[] = {1, 2, 2};
      return forms[lhs ? left[variant] : right[variant]];
    }
    case Relation::eta7: {
      const int si = variant & 1 ? -1 : 1;
      const int sj = variant & 2 ? -1 : 1;
      return lhs ? std::vector{L::sig(i, si), L::sig(j, sj)} : std::vector{L::sig(j, sj), L::sig(i, si)};
    }
    case Relation::eta8:
      return lhs ? std::vector{L::sig(i, s), L::sig(j, s), L::sig(i, s)}
                 : std::vector{L::sig(j, s), L::sig(i, s), L::sig(j, s)};
    case Relation::eta9:
      return lhs ? std::vector{L::tie(i), L::sig(j), L::sig(i, -1)}
                 : std::vector{L::sig(j), L::sig(i, -1), L::tie(j)};
    case Relation::free:
      return lhs ? std::vector{L::sig(i, s), L::sig(i, -s)} : std::vector<L>{};
  }
  return {};
}

namespace {

bool matches_at(const std::vector<Letter>& word, std::size_t pos, const std::vector<Letter>& pattern) {
  if (pattern.empty() || pos + pattern.size() > word.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Replacement for a relation rewrite at move.position, if it matches.
std::optional<std::pair<std::size_t, std::vector<Letter>>> match_rewrite(const TiedBraidWord& w,
                                                                         const Move& move) {
  const int n = w.strands;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= (two_index(move.relation) ? n - 1 : 1); ++j) {
      if (!relation_applies(move.relation, i, j, n)) continue;
      auto from = relation_side(move.relation, i, j, move.forward, move.variant);
      if (matches_at(w.letters, move.position, from)) {
        return std::pair{from.size(), relation_side(move.relation, i, j, !move.forward, move.variant)};
      }
    }
  }
  return std::nullopt;
}

SetPartition permuted_ties(const TiedBraidWord& w, int i) {
  Perm s = Perm(w.strands).times_simple(i);
  return w.top_ties->permuted(s);
}

TiedBraidWord conjugate(const TiedBraidWord& w, int i, int sign) {
  if (i < 1 || i > w.strands - 1 || (sign != 1 && sign != -1)) throw MoveError("conjugation index out of range");
  TiedBraidWord r = w;
  r.letters.insert(r.letters.begin(), Letter::sig(i, -sign));
  r.letters.push_back(Letter::sig(i, sign));
  // Top ties slide across the appended crossing.
  if (w.top_ties) r.top_ties = permuted_ties(w, i);
  return r;
}

TiedBraidWord stabilize(const TiedBraidWord& w, int sign) {
  if (w.strands >= kMaxStrands) throw MoveError("stabilization exceeds the strand limit");
  if (sign != 1 && sign != -1) throw MoveError("stabilization sign must be +-1");
  TiedBraidWord r = w;
  r.strands = w.strands + 1;
  r.letters.push_back(Letter::sig(w.strands, sign));
  if (w.top_ties) {
    r.top_ties = w.top_ties->extended(r.strands);
    r.top_ties = permuted_ties(r, w.strands);
  }
  return r;
}

TiedBraidWord destabilize(const TiedBraidWord& w) {
  const int k = w.strands - 1;
  if (k < 1 || w.letters.empty()) throw MoveError("nothing to destabilize");
  const Letter& last = w.letters.back();
  if (!last.is_sig() || last.index != k) throw MoveError("word does not end with the last generator");
  for (std::size_t p = 0; p + 1 < w.letters.size(); ++p) {
    if (w.letters[p].index == k) throw MoveError("last generator occurs before the end");
  }
  TiedBraidWord r = w;
  r.letters.pop_back();
  r.strands = k;
  if (w.top_ties) {
    SetPartition moved = permuted_ties(w, k);
    if (!moved.is_singleton(k)) throw MoveError("last strand is tied at the top");
    r.top_ties = moved.truncated();
  }
  return r;
}

}  // namespace

TiedBraidWord markov_move(const TiedBraidWord& w, const Move& move) {
  switch (move.kind) {
    case Move::Kind::conjugate: return conjugate(w, move.index, move.sign);
    case Move::Kind::stabilize: return stabilize(w, move.sign);
    case Move::Kind::destabilize: return destabilize(w);
    case Move::Kind::insert_pair: {
      if (move.index < 1 || move.index > w.strands - 1 || move.position > w.letters.size()) {
        throw MoveError("pair insertion out of range");
      }
      TiedBraidWord r = w;
      auto at = r.letters.begin() + static_cast<std::ptrdiff_t>(move.position);
      r.letters.insert(at, {Letter::sig(move.index, move.sign), Letter::sig(move.index, -move.sign)});
      return r;
    }
    case Move::Kind::relation: {
      auto found = match_rewrite(w, move);
      if (!found) throw MoveError("pattern mismatch for " + move.render());
      TiedBraidWord r = w;
      auto at = r.letters.begin() + static_cast<std::ptrdiff_t>(move.position);
      at = r.letters.erase(at, at + static_cast<std::ptrdiff_t>(found->first));
      r.letters.insert(at, found->second.begin(), found->second.end());
      return r;
    }
  }
  throw MoveError("unknown move");
}

std::vector<Move> applicable_rewrites(const TiedBraidWord& w) {
  std::vector<Move> moves;
  for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
    for (Relation r : kAllRelations) {
      for (bool forward : {true, false}) {
        if (r == Relation::free && !forward) continue;  // empty pattern; see insert_pair
        for (int variant = 0; variant < relation_variants(r); ++variant) {
          Move m = Move::rewrite(r, pos, forward, variant);
          if (match_rewrite(w, m)) moves.push_back(m);
        }
      }
    }
  }
  return moves;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Move random_move(const TiedBraidWord& w, std::mt19937_64& rng, const FuzzLimits& limits) {
  const std::size_t len = w.letters.size();
  const bool can_grow = len + 2 <= limits.max_length;
  std::vector<Move> candidates;
  if (w.strands >= 2 && can_grow) {
    candidates.push_back(Move::conjugate(uniform(rng, 1, w.strands - 1), uniform(rng, 0, 1) ? 1 : -1));
    candidates.push_back(Move::insert_pair(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(len))),
                                           uniform(rng, 1, w.strands - 1), uniform(rng, 0, 1) ? 1 : -1));
  }
  if (w.strands < limits.max_strands && len + 1 <= limits.max_length) {
    candidates.push_back(Move::stabilize(uniform(rng, 0, 1) ? 1 : -1));
  }
  try {
    destabilize(w);
    candidates.push_back(Move::destabilize());
  } catch (const MoveError&) {
  }
  std::vector<Move> rewrites = applicable_rewrites(w);
  std::erase_if(rewrites, [&](const Move& m) {
    return m.relation == Relation::eta2 && !m.forward && len + 1 > limits.max_length;
  });
  // Rewrites are weighted like the other moves combined.
  if (!rewrites.empty()) {
    for (std::size_t k = 0, reps = std::max<std::size_t>(1, candidates.size()); k < reps; ++k) {
      candidates.push_back(rewrites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rewrites.size()) - 1))]);
    }
  }
  if (candidates.empty()) throw MoveError("no applicable move within limits");
  return candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(candidates.size()) - 1))];
}

TiedBraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng, double tie_ratio) {
  TiedBraidWord w;
  w.strands = strands;
  if (strands < 2) return w;
  std::bernoulli_distribution is_tie(tie_ratio);
  for (std::size_t k = 0; k < length; ++k) {
    int i = uniform(rng, 1, strands - 1);
    w.letters.push_back(is_tie(rng) ? Letter::tie(i) : Letter::sig(i, uniform(rng, 0, 1) ? 1 : -1));
  }
  return w;
}

}  // namespace btinv
