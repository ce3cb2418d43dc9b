// Verification of the defining relations of E_n(u, v) and of the change of
// generators T_i = R_i + delta E_i R_i, as operator identities: both sides
// act by right multiplication on random elements and the results are
// compared exactly.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "btinv/btalgebra.hpp"

namespace btinv {

struct RelationResult {
  std::string id;
  int instances = 0;  // elements tested
  int failures = 0;
  std::string witness;  // first failing element and index pair
  bool skipped = false;  // no index pair exists at this strand count
  bool passed() const { return skipped || (failures == 0 && instances > 0); }
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool passed() const;
  /// One "PASS id (k checks)", "SKIP id ..." or "FAIL id ..." line per relation.
  std::string render() const;
};

struct RelationOptions {
  int strands = 3;
  std::uint64_t seed = 42;
  int trials = 200;  // random elements per relation
  /// Also test the variant E_i R_j R_i = R_j R_i E_i (tie index repeated),
  /// which does not hold; used to show the harness detects a false
  /// identity.
  bool include_repeated_index_bt5 = false;
};

/// bt1..bt9, the inverse formula, and at v = 1 the quadratic, cubic and
/// quartic identities.
RelationReport check_relations(const RelationOptions& options);

/// With T_i = R_i + delta E_i R_i over K[delta]: the quadratic relation of
/// T_i, the coefficient identity defining delta, bt1..bt8 for T_i, recovery
/// of R_i, and the one-parameter quadratics at v = u and at u = 1.
RelationReport check_isomorphism(const RelationOptions& options);

/// A random element with a few terms and small polynomial coefficients.
Elem random_element(int strands, std::mt19937_64& rng, int max_terms = 3);

}  // namespace btinv
