#include "btinv/omega.hpp"

#include <numeric>
#include <optional>

namespace btinv {

const Frac& omega_radicand() {
  static const Frac c = scaling_factor(Frac::var(Var::u), Frac(1));
  return c;
}

Scalar sqrt_u() { return Scalar::root_power(-1, omega_radicand()); }

namespace {

// Union-find over class vertices, counting connected components.
int component_count(int vertices, const std::vector<GraphEdge>& edges, std::uint64_t subset) {
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = vertices;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(subset >> e & 1)) continue;
    int x = find(edges[e].from), y = find(edges[e].to);
    if (x != y) {
      parent[x] = y;
      --count;
    }
  }
  return count;
}

}  // namespace

OmegaSummary omega_from_graph(int m, const CLinkingGraph& graph) {
  if (graph.edges.size() >= 63) throw std::length_error("c-linking graph has too many edges");
  const Frac u = Frac::var(Var::u), a = Frac::var(Var::a), b = Frac::var(Var::b);
  const std::size_t p = graph.edges.size();

  std::vector<Frac> keep, join;  // u^{-l}, 1 - u^{-l}
  for (const auto& e : graph.edges) {
    keep.push_back(u.pow(static_cast<int>(-e.weight)));
    join.push_back(Frac(1) - keep.back());
  }

  Frac sum;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << p); ++subset) {
    Frac term = b.pow(m - component_count(graph.vertices, graph.edges, subset));
    for (std::size_t e = 0; e < p; ++e) term *= (subset >> e & 1) ? join[e] : keep[e];
    sum += term;
  }

  OmegaSummary r;
  r.m = m;
  r.k = graph.vertices;
  r.p = static_cast<int>(p);
  r.edges = graph.edges;
  // (sqrt(u)/a)^{m-1} = sqrt(c)^{1-m} a^{1-m} at v = 1
  r.value = Scalar::root_power(1 - m, omega_radicand()) * (a.pow(1 - m) * sum);
  return r;
}

OmegaSummary omega_fast(const TiedBraidWord& w) {
  LinkingData data = linking_data(w);
  return omega_from_graph(data.components, data.class_graph);
}

namespace {

std::optional<int> uniform_degree(const MPoly& p, Var x) {
  int d = p.degree(x);
  if (p.min_degree(x) != d) return std::nullopt;
  return d;
}

}  // namespace

OmegaExponents omega_exponents(const Scalar& value) {
  std::optional<int> r, s_b;
  for (const Frac* part : {&value.even(), &value.odd()}) {
    if (part->is_zero()) continue;
    auto num_a = uniform_degree(part->num(), Var::a);
    auto den_a = uniform_degree(part->den(), Var::a);
    auto den_b = uniform_degree(part->den(), Var::b);
    if (!num_a || !den_a || !den_b) {
      throw StructureError("value has no single a-exponent: " + value.render());
    }
    int part_r = *num_a - *den_a;
    if (r && *r != part_r) throw StructureError("even and odd parts disagree on the a-exponent");
    r = part_r;
    int part_s = part->num().min_degree(Var::b) - *den_b;
    s_b = s_b ? std::min(*s_b, part_s) : part_s;
  }
  if (!r) throw StructureError("zero value has no exponents");
  return OmegaExponents{*r, *s_b, 1 - *r, 1 - *r - *s_b};
}

const char* skein_rule_name(SkeinRule r) {
  switch (r) {
    case SkeinRule::III: return "III";
    case SkeinRule::IV: return "IV";
    case SkeinRule::Va: return "Va";
    case SkeinRule::Vb: return "Vb";
    case SkeinRule::II: return "II";
    case SkeinRule::tiedII: return "tiedII";
    case SkeinRule::omegaIV: return "omegaIV";
    case SkeinRule::qp: return "qp";
    case SkeinRule::omegaII: return "omegaII";
    case SkeinRule::omegaIII: return "omegaIII";
  }
  return "?";
}

SkeinRule parse_skein_rule(const std::string& name) {
  for (SkeinRule r : kAllSkeinRules) {
    if (name == skein_rule_name(r)) return r;
  }
  throw ValidationError("unknown skein rule '" + name + "'");
}

bool is_crossing_rule(SkeinRule r) {
  switch (r) {
    case SkeinRule::II:
    case SkeinRule::tiedII:
    case SkeinRule::omegaII:
    case SkeinRule::omegaIII: return false;
    default: return true;
  }
}

SkeinDiagrams skein_diagrams(const TiedBraidWord& w, std::size_t pos) {
  w.validate();
  if (pos >= w.letters.size() || !w.letters[pos].is_sig()) {
    throw ValidationError("position " + std::to_string(pos) + " is not a crossing");
  }
  const int i = w.letters[pos].index;
  const auto at = static_cast<std::ptrdiff_t>(pos);
  auto with = [&](std::vector<Letter> replacement) {
    TiedBraidWord r = w;
    auto it = r.letters.erase(r.letters.begin() + at);
    r.letters.insert(it, replacement.begin(), replacement.end());
    return r;
  };
  return SkeinDiagrams{with({Letter::sig(i, 1)}), with({Letter::sig(i, -1)}), with({Letter::tie(i)}),
                       with({Letter::tie(i), Letter::sig(i, 1)}), with({Letter::tie(i), Letter::sig(i, -1)})};
}

SkeinChecker::SkeinChecker() : generic_(), omega_(Specialization::omega) {}

namespace {

// w with one more strand, free or tied to the last strand.
TiedBraidWord add_unknot(const TiedBraidWord& w, bool tied) {
  TiedBraidWord r = w;
  r.strands = w.strands + 1;
  if (w.top_ties) r.top_ties = w.top_ties->extended(r.strands);
  if (tied) r.letters.push_back(Letter::tie(w.strands));
  return r;
}

}  // namespace

bool SkeinChecker::check(const TiedBraidWord& w, std::size_t pos, SkeinRule rule) {
  const Frac u = Frac::var(Var::u), v = Frac::var(Var::v), a = Frac::var(Var::a), b = Frac::var(Var::b);
  const Frac one(1);

  if (!is_crossing_rule(rule)) {
    const bool at_v1 = rule == SkeinRule::omegaII || rule == SkeinRule::omegaIII;
    const bool tied = rule == SkeinRule::tiedII || rule == SkeinRule::omegaIII;
    Evaluator& ev = at_v1 ? omega_ : generic_;
    w.validate();
    Scalar base = ev.upsilon(w);
    Scalar grown = ev.upsilon(add_unknot(w, tied));
    Scalar factor = Scalar::root_power(-1, ev.radicand()) * a.inverse();
    if (tied) factor *= b;
    return grown == factor * base;
  }

  SkeinDiagrams d = skein_diagrams(w, pos);
  if (rule == SkeinRule::omegaIV || rule == SkeinRule::qp) {
    Scalar plus_tied = omega_.upsilon(d.plus_tied);
    if (rule == SkeinRule::qp) return plus_tied == omega_.upsilon(d.minus_tied);
    Scalar root_u = sqrt_u();
    Scalar lhs = root_u * omega_.upsilon(d.plus) - root_u.inverse() * omega_.upsilon(d.minus) +
                 root_u * (u.inverse() - one) * plus_tied;
    return lhs.is_zero();
  }

  const Frac& c = generic_.radicand();
  const Scalar root = Scalar::root(c);
  const Scalar inv_root = Scalar::root_power(-1, c);
  switch (rule) {
    case SkeinRule::III: {
      Scalar lhs = inv_root * generic_.upsilon(d.plus) - root * generic_.upsilon(d.minus);
      Scalar rhs = ((v - one) / u) * generic_.upsilon(d.tied) +
                   inv_root * (one - u.inverse()) * generic_.upsilon(d.plus_tied);
      return lhs == rhs;
    }
    case SkeinRule::IV: {
      Scalar lhs = inv_root * u.inverse() * generic_.upsilon(d.plus_tied) - root * generic_.upsilon(d.minus_tied);
      return lhs == ((v - one) / u) * generic_.upsilon(d.tied);
    }
    case SkeinRule::Va: {
      Scalar lhs = inv_root * generic_.upsilon(d.plus);
      Scalar rhs = root * (generic_.upsilon(d.minus) + (u - one) * generic_.upsilon(d.minus_tied)) +
                   (v - one) * generic_.upsilon(d.tied);
      return lhs == rhs;
    }
    case SkeinRule::Vb: {
      Scalar lhs = root * generic_.upsilon(d.minus);
      Scalar rhs = inv_root * (generic_.upsilon(d.plus) + ((one - u) / u) * generic_.upsilon(d.plus_tied)) +
                   ((one - v) / u) * generic_.upsilon(d.tied);
      return lhs == rhs;
    }
    default: break;
  }
  throw std::logic_error("unhandled skein rule");
}

bool skein_check(const TiedBraidWord& w, std::size_t pos, SkeinRule rule) {
  SkeinChecker checker;
  return checker.check(w, pos, rule);
}

}  // namespace btinv
