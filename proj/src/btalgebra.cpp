#include "btinv/btalgebra.hpp"

namespace btinv {

template class AlgebraElem<Frac>;
template class AlgebraElem<DeltaExt>;
template class BtAlgebra<Frac>;
template class BtAlgebra<DeltaExt>;

const Algebra& generic_algebra() {
  static const Algebra algebra(Frac::var(Var::u), Frac::var(Var::v));
  return algebra;
}

Algebra specialized_algebra(const Bindings& bindings) {
  return Algebra(Frac::var(Var::u).substitute(bindings), Frac::var(Var::v).substitute(bindings));
}

Elem substitute(const Elem& x, const Bindings& bindings) {
  return x.map_coefficients([&](const Frac& c) { return c.substitute(bindings); });
}

}  // namespace btinv
