#include "btinv/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace btinv {

bool RelationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const RelationResult& r) { return r.passed(); });
}

std::string RelationReport::render() const {
  std::ostringstream out;
  for (const auto& r : results) {
    if (r.skipped) {
      out << "SKIP " << r.id << " (" << r.witness << ")\n";
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.instances << " checks";
    if (r.failures) out << ", " << r.failures << " failures";
    out << ")\n";
    if (!r.witness.empty()) out << "  witness: " << r.witness << "\n";
  }
  return out.str();
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SetPartition random_partition(int n, std::mt19937_64& rng) {
  SetPartition p(n);
  for (int k = uniform(rng, 0, n - 1); k > 0; --k) p = p.join_pair(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  return p;
}

Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_one_line(images);
}

// Small nonzero coefficients such as 3, u - 2, a*v + 1.
Frac random_coefficient(std::mt19937_64& rng) {
  static const Var vars[] = {Var::u, Var::v, Var::a, Var::b};
  MPoly p(static_cast<long>(uniform(rng, 1, 5)) * (uniform(rng, 0, 1) ? 1 : -1));
  for (int k = uniform(rng, 0, 2); k > 0; --k) {
    p += MPoly::var(vars[uniform(rng, 0, 3)]) * MPoly(static_cast<long>(uniform(rng, -3, 3)));
  }
  return p.is_zero() ? Frac(1) : Frac(p);
}

template <typename K>
AlgebraElem<K> random_elem(int n, std::mt19937_64& rng, int max_terms) {
  AlgebraElem<K> x(n);
  for (int t = uniform(rng, 1, max_terms); t > 0; --t) {
    x.add_term(Basis{random_partition(n, rng), random_perm(n, rng)}, K(random_coefficient(rng)));
  }
  if (x.is_zero()) x = AlgebraElem<K>::one(n);
  return x;
}

// Right-multiplication operators and linear combinations of them.
template <typename K>
class Ops {
 public:
  using E = AlgebraElem<K>;
  using Op = std::function<E(const E&)>;

  explicit Ops(BtAlgebra<K> alg) : alg_(std::move(alg)) {}
  const BtAlgebra<K>& algebra() const { return alg_; }

  Op R(int i, int sign = 1) const {
    return [this, i, sign](const E& x) { return alg_.mul_R(x, i, sign); };
  }
  Op tie(int i) const {
    return [this, i](const E& x) { return alg_.mul_E(x, i); };
  }
  static Op id() {
    return [](const E& x) { return x; };
  }
  /// Apply ops left to right (x * g1 * g2 * ...).
  static Op seq(std::vector<Op> ops) {
    return [ops = std::move(ops)](const E& x) {
      E r = x;
      for (const auto& op : ops) r = op(r);
      return r;
    };
  }
  static Op lin(std::vector<std::pair<K, Op>> parts) {
    return [parts = std::move(parts)](const E& x) {
      E r(x.strands());
      for (const auto& [c, op] : parts) r += op(x) * c;
      return r;
    };
  }

 private:
  BtAlgebra<K> alg_;
};

template <typename K>
struct Identity {
  std::string id;
  // instance (i, j) -> (lhs, rhs); j is unused by one-index identities
  std::function<std::pair<typename Ops<K>::Op, typename Ops<K>::Op>(int, int)> sides;
  enum class Pairs { one, any_distinct, far, adjacent } pairs = Pairs::one;
};

template <typename K>
std::vector<std::pair<int, int>> instances(typename Identity<K>::Pairs kind, int n) {
  using P = typename Identity<K>::Pairs;
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n - 1; ++i) {
    if (kind == P::one) {
      out.emplace_back(i, i);
      continue;
    }
    for (int j = 1; j <= n - 1; ++j) {
      int d = std::abs(i - j);
      if ((kind == P::any_distinct && d != 0) || (kind == P::far && d > 1) || (kind == P::adjacent && d == 1)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

template <typename K>
RelationResult run_identity(const Identity<K>& identity, int n, int trials, std::mt19937_64& rng) {
  RelationResult result;
  result.id = identity.id;
  auto pairs = instances<K>(identity.pairs, n);
  if (pairs.empty()) {
    result.skipped = true;
    result.witness = "no index pair on " + std::to_string(n) + " strands";
    return result;
  }
  for (int t = 0; t < trials; ++t) {
    auto [i, j] = pairs[static_cast<std::size_t>(t) % pairs.size()];
    AlgebraElem<K> x = random_elem<K>(n, rng, 3);
    auto [lhs, rhs] = identity.sides(i, j);
    ++result.instances;
    if (!(lhs(x) == rhs(x))) {
      if (result.failures++ == 0) {
        result.witness = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " x=" + x.render();
      }
    }
  }
  return result;
}

// bt1..bt8 for generators g (R_i, or T_i over K[delta]) and ties E_i.
template <typename K>
std::vector<Identity<K>> braid_tie_identities(const Ops<K>& ops, std::function<typename Ops<K>::Op(int)> g,
                                              const std::string& prefix) {
  using O = Ops<K>;
  using P = typename Identity<K>::Pairs;
  auto E = [&ops](int i) { return ops.tie(i); };
  std::vector<Identity<K>> ids;
  ids.push_back({prefix + "bt1", [=](int i, int j) { return std::pair{O::seq({E(i), E(j)}), O::seq({E(j), E(i)})}; },
                 P::any_distinct});
  ids.push_back({prefix + "bt2", [=](int i, int) { return std::pair{O::seq({E(i), E(i)}), E(i)}; }, P::one});
  ids.push_back({prefix + "bt3", [=](int i, int j) { return std::pair{O::seq({E(i), g(j)}), O::seq({g(j), E(i)})}; },
                 P::far});
  ids.push_back({prefix + "bt4", [=](int i, int) { return std::pair{O::seq({E(i), g(i)}), O::seq({g(i), E(i)})}; },
                 P::one});
  ids.push_back({prefix + "bt5",
                 [=](int i, int j) { return std::pair{O::seq({E(i), g(j), g(i)}), O::seq({g(j), g(i), E(j)})}; },
                 P::adjacent});
  ids.push_back({prefix + "bt6a",
                 [=](int i, int j) { return std::pair{O::seq({E(i), E(j), g(i)}), O::seq({E(j), g(i), E(j)})}; },
                 P::adjacent});
  ids.push_back({prefix + "bt6b",
                 [=](int i, int j) { return std::pair{O::seq({E(j), g(i), E(j)}), O::seq({g(i), E(i), E(j)})}; },
                 P::adjacent});
  ids.push_back({prefix + "bt6c",
                 [=](int i, int j) { return std::pair{O::seq({E(i), E(j), g(i)}), O::seq({g(i), E(i), E(j)})}; },
                 P::adjacent});
  ids.push_back({prefix + "bt7", [=](int i, int j) { return std::pair{O::seq({g(i), g(j)}), O::seq({g(j), g(i)})}; },
                 P::far});
  ids.push_back({prefix + "bt8",
                 [=](int i, int j) { return std::pair{O::seq({g(i), g(j), g(i)}), O::seq({g(j), g(i), g(j)})}; },
                 P::adjacent});
  return ids;
}

// x * (lhs) = x * (rhs) with both sides written in R_i, E_i over a Frac
// algebra (used for the specialized algebras).
using FracOps = Ops<Frac>;
using FracIdentity = Identity<Frac>;

RelationResult quadratic_identity(const std::string& id, const Algebra& alg, const Frac& tie_coeff,
                                  const Frac& tie_braid_coeff, int n, int trials, std::mt19937_64& rng) {
  // R_i^2 = 1 + tie_coeff E_i + tie_braid_coeff E_i R_i
  FracOps ops(alg);
  FracIdentity identity{id, [&](int i, int) {
                          return std::pair{FracOps::seq({ops.R(i), ops.R(i)}),
                                           FracOps::lin({{Frac(1), FracOps::id()},
                                                         {tie_coeff, ops.tie(i)},
                                                         {tie_braid_coeff, FracOps::seq({ops.tie(i), ops.R(i)})}})};
                        }};
  return run_identity(identity, n, trials, rng);
}

}  // namespace

Elem random_element(int strands, std::mt19937_64& rng, int max_terms) {
  return random_elem<Frac>(strands, rng, max_terms);
}

RelationReport check_relations(const RelationOptions& options) {
  if (options.strands < 2 || options.strands > 6) throw std::invalid_argument("relation checks need 2..6 strands");
  const int n = options.strands;
  std::mt19937_64 rng(options.seed);
  RelationReport report;
  using P = FracIdentity::Pairs;

  const Frac u = Frac::var(Var::u), v = Frac::var(Var::v), one(1);
  FracOps ops(generic_algebra());
  auto R = [&ops](int i) { return ops.R(i); };
  std::vector<FracIdentity> ids = braid_tie_identities<Frac>(ops, R, "");
  ids.push_back({"bt9", [&](int i, int) {
                   return std::pair{FracOps::seq({ops.R(i), ops.R(i)}),
                                    FracOps::lin({{one, FracOps::id()},
                                                  {u - one, ops.tie(i)},
                                                  {v - one, FracOps::seq({ops.tie(i), ops.R(i)})}})};
                 }});
  // R_i^{-1} = R_i + (1 - v)/u E_i + (1/u - 1) E_i R_i, checked as a two-sided inverse.
  auto inverse_expansion = [&](int i) {
    return FracOps::lin({{one, ops.R(i)},
                         {(one - v) / u, ops.tie(i)},
                         {u.inverse() - one, FracOps::seq({ops.tie(i), ops.R(i)})}});
  };
  ids.push_back({"Tinverse-right", [&, inverse_expansion](int i, int) {
                   return std::pair{FracOps::seq({ops.R(i), inverse_expansion(i)}), FracOps::id()};
                 }});
  ids.push_back({"Tinverse-left", [&, inverse_expansion](int i, int) {
                   return std::pair{FracOps::seq({inverse_expansion(i), ops.R(i)}), FracOps::id()};
                 }});
  ids.push_back({"Tinverse-mul", [&](int i, int) {
                   return std::pair{FracOps::seq({ops.R(i), ops.R(i, -1)}), FracOps::id()};
                 }});
  if (options.include_repeated_index_bt5) {
    ids.push_back({"bt5-repeated-index",
                   [&](int i, int j) {
                     return std::pair{FracOps::seq({ops.tie(i), ops.R(j), ops.R(i)}),
                                      FracOps::seq({ops.R(j), ops.R(i), ops.tie(i)})};
                   },
                   P::adjacent});
  }
  for (const auto& identity : ids) report.results.push_back(run_identity(identity, n, options.trials, rng));

  // v = 1
  const Algebra at_v1 = specialized_algebra({{Var::v, one}});
  report.results.push_back(quadratic_identity("v1-quadratic", at_v1, u - one, Frac(), n, options.trials, rng));
  FracOps ops1(at_v1);
  FracIdentity cubic{"v1-cubic", [&](int i, int) {
                       return std::pair{FracOps::lin({{u + one, ops1.R(i)}, {-u, ops1.R(i, -1)}}),
                                        FracOps::seq({ops1.R(i), ops1.R(i), ops1.R(i)})};
                     }};
  FracIdentity quartic{"v1-quartic", [&](int i, int) {
                         auto square = FracOps::seq({ops1.R(i), ops1.R(i)});
                         auto first = FracOps::lin({{one, square}, {-one, FracOps::id()}});
                         auto second = FracOps::lin({{one, square}, {-u, FracOps::id()}});
                         return std::pair{FracOps::seq({first, second}),
                                          FracOps::Op([](const Elem& x) { return Elem(x.strands()); })};
                       }};
  report.results.push_back(run_identity(cubic, n, options.trials, rng));
  report.results.push_back(run_identity(quartic, n, options.trials, rng));
  return report;
}

RelationReport check_isomorphism(const RelationOptions& options) {
  if (options.strands < 2 || options.strands > 6) throw std::invalid_argument("isomorphism checks need 2..6 strands");
  const int n = options.strands;
  std::mt19937_64 rng(options.seed);
  RelationReport report;

  using D = DeltaExt;
  using DOps = Ops<D>;
  const Frac uf = Frac::var(Var::u), vf = Frac::var(Var::v);
  const D u(uf), v(vf), one(1L), delta = D::delta();
  const D dp1 = delta + one;

  // Coefficient identity: u(delta+1)^2 - 1 = (v-1)(delta+1).
  {
    RelationResult r{"delta-coefficients", 1, 0, ""};
    D lhs = u * dp1 * dp1 - one, rhs = (v - one) * dp1;
    if (!(lhs == rhs)) {
      r.failures = 1;
      r.witness = lhs.render() + " vs " + rhs.render();
    }
    report.results.push_back(r);
  }
  {
    RelationResult r{"delta-minimal-polynomial", 1, 0, ""};
    D value = D::minimal_polynomial_at(delta);
    if (!value.is_zero()) {
      r.failures = 1;
      r.witness = value.render();
    }
    report.results.push_back(r);
  }

  DOps ops(DeltaAlgebra(u, v));
  // T_i = R_i + delta E_i R_i
  auto T = [&ops, delta](int i) {
    return DOps::lin({{D(1L), ops.R(i)}, {delta, DOps::seq({ops.tie(i), ops.R(i)})}});
  };
  std::vector<Identity<D>> ids = braid_tie_identities<D>(ops, T, "T-");
  const D quad_tie = u * dp1 * dp1 - one;
  const D quad_tie_t = (v - one) * dp1;
  ids.push_back({"T-quadratic", [&, T](int i, int) {
                   return std::pair{DOps::seq({T(i), T(i)}),
                                    DOps::lin({{one, DOps::id()},
                                               {quad_tie, ops.tie(i)},
                                               {quad_tie_t, DOps::seq({ops.tie(i), T(i)})}})};
                 }});
  const D back = -(delta * dp1.inverse());
  ids.push_back({"R-recovery", [&, T](int i, int) {
                   return std::pair{DOps::lin({{one, T(i)}, {back, DOps::seq({ops.tie(i), T(i)})}}), ops.R(i)};
                 }});
  for (const auto& identity : ids) report.results.push_back(run_identity(identity, n, options.trials, rng));

  // One-parameter presentations.
  const Frac one_f(1);
  const Frac q = Frac::var(Var::q);
  report.results.push_back(quadratic_identity("first-quadratic(v=u)", specialized_algebra({{Var::v, uf}}),
                                              uf - one_f, uf - one_f, n, options.trials, rng));
  const Frac v_theta = q - q.inverse() + one_f;
  report.results.push_back(quadratic_identity("second-quadratic(u=1)",
                                              specialized_algebra({{Var::u, one_f}, {Var::v, v_theta}}), Frac(),
                                              q - q.inverse(), n, options.trials, rng));
  // V_i = T_i + (1/q - 1) E_i T_i in E_n(u, u) with u = q^2.
  {
    const Frac q2 = q * q;
    FracOps ops_q(specialized_algebra({{Var::u, q2}, {Var::v, q2}}));
    const Frac shift = q.inverse() - one_f;
    auto V = [&ops_q, shift](int i) {
      return FracOps::lin({{Frac(1), ops_q.R(i)}, {shift, FracOps::seq({ops_q.tie(i), ops_q.R(i)})}});
    };
    FracIdentity second{"V-quadratic(u=q^2)", [&, V](int i, int) {
                          return std::pair{FracOps::seq({V(i), V(i)}),
                                           FracOps::lin({{one_f, FracOps::id()},
                                                         {q - q.inverse(), FracOps::seq({ops_q.tie(i), V(i)})}})};
                        }};
    report.results.push_back(run_identity(second, n, options.trials, rng));
  }
  return report;
}

}  // namespace btinv
