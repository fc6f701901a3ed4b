#include "framiz/field.hpp"

namespace framiz {

AnyField make_field(const FieldSpec& spec) {
  if (spec.d <= 0) throw Error(ErrorCode::UnsupportedD, "d must be positive");
  if (spec.backend == Backend::Exact && spec.with_a && !spec.a_power)
    throw Error(ErrorCode::UnsupportedVariable, "exact backend needs a pinned to sign*q^k");
  if (spec.backend == Backend::Exact) return std::make_shared<const ExactField>(spec.d, spec.a_power);
  return std::make_shared<const ModularField>(spec.prime, spec.d, spec.seed, spec.root_order_bound,
                                              spec.a_power);
}

}  // namespace framiz
