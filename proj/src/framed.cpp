#include "framiz/framed.hpp"

namespace framiz {

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::Framed: return "framed";
    case Preset::Affine: return "affine";
    case Preset::Tied: return "tied";
  }
  return "?";
}

}  // namespace framiz
