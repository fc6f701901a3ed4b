#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "framiz/exact.hpp"
#include "framiz/modular.hpp"

namespace framiz {

enum class Backend { Exact, Modular };

struct FieldSpec {
  Backend backend = Backend::Modular;
  int d = 1;
  bool with_a = false;  // whether a is needed; pinned by a_power when set
  std::optional<SignedPower> a_power;
  u64 prime = 0;
  u64 seed = 1;
  int root_order_bound = 32;
};

using ModularHandle = std::shared_ptr<const ModularField>;
using ExactHandle = std::shared_ptr<const ExactField>;
using AnyField = std::variant<ModularHandle, ExactHandle>;

AnyField make_field(const FieldSpec& spec);

template <class F>
typename F::Elem primitive_root(const F& field, int d) {
  if (d != field.d()) throw Error(ErrorCode::UnsupportedD, "field was built for a different d");
  return field.zeta();
}

template <class F>
using FieldHandle = std::shared_ptr<const F>;

}  // namespace framiz
