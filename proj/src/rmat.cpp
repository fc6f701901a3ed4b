#include "framiz/rmat.hpp"

#include <cctype>

namespace framiz {

std::optional<SignedPower> BlockKind::a_power() const {
  switch (family) {
    case Family::SO: return SignedPower{1, vector_dim() - 1};
    case Family::SP: return SignedPower{-1, vector_dim() + 1};
    default: return std::nullopt;
  }
}

std::string BlockKind::str() const {
  const char* name = family == Family::GL ? "GL" : family == Family::SO ? "SO" : "SP";
  return std::string(name) + "(" + std::to_string(vector_dim()) + ")";
}

BlockKind parse_block_kind(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t.size() < 3) throw Error(ErrorCode::UnsupportedKind, "cannot parse block kind '" + s + "'");
  std::string fam = t.substr(0, 2), num = t.substr(2);
  int dim = 0;
  try {
    std::size_t used = 0;
    dim = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw Error(ErrorCode::UnsupportedKind, "cannot parse block kind '" + s + "'");
  }
  if (dim < 1) throw Error(ErrorCode::UnsupportedKind, "dimension must be positive in '" + s + "'");
  if (fam == "GL") return {Family::GL, dim};
  if (fam == "SO" || fam == "SP") {
    if (dim % 2) throw Error(ErrorCode::UnsupportedKind, s + ": only even vector dimensions are supported for SO/SP");
    if (fam == "SO" && dim < 4) throw Error(ErrorCode::UnsupportedKind, s + ": SO needs vector dimension >= 4");
    return {fam == "SO" ? Family::SO : Family::SP, dim / 2};
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown family in '" + s + "'");
}

BoundaryRep parse_boundary(const std::string& s) {
  if (s == "V" || s == "v" || s == "vector") return {BoundaryRep::Type::Vector, 1};
  std::string t = s;
  if (t.rfind("Sym", 0) == 0 || t.rfind("sym", 0) == 0) {
    t = t.substr(3);
    if (!t.empty() && t[0] == '^') t = t.substr(1);
    try {
      std::size_t used = 0;
      int k = std::stoi(t, &used);
      if (used == t.size() && k >= 0) return {BoundaryRep::Type::Sym, k};
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::UnsupportedBoundary, "cannot parse boundary '" + s + "'");
}

}  // namespace framiz
