#include "btinv/invariants.hpp"

namespace btinv {

const char* specialization_name(Specialization s) {
  switch (s) {
    case Specialization::none: return "upsilon";
    case Specialization::delta: return "delta";
    case Specialization::theta: return "theta";
    case Specialization::omega: return "omega";
  }
  return "?";
}

Bindings specialization_bindings(Specialization s, bool theta_q) {
  switch (s) {
    case Specialization::none: return {};
    case Specialization::delta: return {{Var::v, Frac::var(Var::u)}};
    case Specialization::theta: {
      Bindings b{{Var::u, Frac(1)}};
      if (theta_q) {
        MPoly q = MPoly::var(Var::q);
        b.emplace(Var::v, Frac(q * q + q - MPoly(1L), q));
      }
      return b;
    }
    case Specialization::omega: return {{Var::v, Frac(1)}};
  }
  return {};
}

namespace {

Frac bound(Var x, const Bindings& params) {
  auto it = params.find(x);
  return it == params.end() ? Frac::var(x) : it->second;
}

Specialization detect(const Bindings& params) {
  for (auto s : {Specialization::delta, Specialization::theta, Specialization::omega}) {
    if (params == specialization_bindings(s)) return s;
  }
  return Specialization::none;
}

}  // namespace

Evaluator::Evaluator(Bindings params, TiePartner partner)
    : params_(std::move(params)),
      engine_(Algebra(bound(Var::u, params_), bound(Var::v, params_)), bound(Var::a, params_),
              bound(Var::b, params_), partner),
      radicand_(params_.empty() ? scaling_factor()
                                : scaling_factor(bound(Var::u, params_), bound(Var::v, params_))
                                      .substitute(params_)),
      radicand_numerator_(radicand_.num()),
      specialization_(detect(params_)) {}

Scalar Evaluator::upsilon(const TiedBraidWord& w) {
  Elem x = engine_.algebra().from_word(w);
  Frac rho = engine_.trace(x);
  const int n = w.strands;
  Frac normalization = engine_.a().pow(1 - n);
  Scalar value = Scalar::root_power(w.exponent_sum() + 1 - n, radicand_) * (normalization * rho);
  return value.cancel(radicand_numerator_);
}

InvariantValue Evaluator::evaluate(const TiedBraidWord& w) {
  LinkingData data = linking_data(w);
  return InvariantValue{upsilon(w), "trace", specialization_, w.strands, data.components,
                        data.class_count()};
}

InvariantValue upsilon(const TiedBraidWord& w) {
  Evaluator evaluator;
  return evaluator.evaluate(w);
}

InvariantValue specialize(const InvariantValue& x, Specialization which, bool theta_q) {
  InvariantValue r = x;
  r.specialization = which;
  Scalar value = x.value.substitute(specialization_bindings(which, theta_q));
  r.value = value.cancel(value.radicand().num());
  return r;
}

namespace {

void require_classical(const TiedBraidWord& w) {
  if (w.has_ties()) {
    throw ValidationError("Homflypt comparison needs classical links; '" +
                          (w.name.empty() ? std::string("input") : w.name) + "' has ties");
  }
}

}  // namespace

bool homflypt_equal(const TiedBraidWord& w1, const TiedBraidWord& w2, Evaluator& evaluator) {
  require_classical(w1);
  require_classical(w2);
  return evaluator.upsilon(tie_all(w1)) == evaluator.upsilon(tie_all(w2));
}

bool homflypt_equal(const TiedBraidWord& w1, const TiedBraidWord& w2) {
  Evaluator evaluator;
  return homflypt_equal(w1, w2, evaluator);
}

}  // namespace btinv
