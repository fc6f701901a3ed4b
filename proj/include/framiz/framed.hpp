#pragma once

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "framiz/combinat.hpp"
#include "framiz/rmat.hpp"

namespace framiz {

// V = V_1 + ... + V_d in block-major order; V^{(x) n} row-major over legs.
// With a boundary the space is M (x) V^{(x) n}, M = M_1 (x) ... (x) M_d
// (row-major over blocks) as the leading factor.
template <class F>
struct FramedSetup {
  using Elem = typename F::Elem;

  FieldHandle<F> field;
  int d = 1;
  int n = 0;
  std::vector<RMatrixPack<F>> packs;
  std::optional<std::vector<BoundaryRep>> boundary;
  std::vector<SparseMatrix<F>> K, K_inv;  // per block, on M_b (x) V_b

  std::vector<std::size_t> block_dim, block_offset;
  std::vector<int> label;      // block of each basis vector of V
  std::vector<std::size_t> local;  // index inside its block
  std::size_t dim_v = 0;
  std::vector<std::size_t> m_dim;
  std::size_t dim_m = 1;

  std::size_t legs_dim() const { return detail::ipow(dim_v, n); }
  std::size_t ambient() const { return dim_m * legs_dim(); }
  bool has_boundary() const { return boundary.has_value(); }
  bool homogeneous() const {
    for (const auto& p : packs)
      if (!(p.kind == packs.front().kind)) return false;
    if (boundary)
      for (const auto& b : *boundary)
        if (!(b == boundary->front())) return false;
    return true;
  }

  // Block (0-based) of leg i (1-based) for an ambient basis index.
  int leg_label(std::size_t idx, int i) const {
    std::size_t x = (idx / detail::ipow(dim_v, n - i)) % dim_v;
    return label[x];
  }

  std::string describe() const {
    std::string s = "d=" + std::to_string(d) + " n=" + std::to_string(n) + " blocks=";
    for (int b = 0; b < d; ++b) s += (b ? "," : "") + packs[b].kind.str();
    if (boundary) {
      s += " boundary=";
      for (int b = 0; b < d; ++b) s += (b ? "," : "") + (*boundary)[b].str();
    }
    return s;
  }
};

template <class F>
FramedSetup<F> make_setup(const FieldHandle<F>& fh, const std::vector<BlockKind>& kinds, int n,
                          std::optional<std::vector<BoundaryRep>> boundary = std::nullopt) {
  if (kinds.empty()) throw Error(ErrorCode::UnsupportedD, "at least one block is needed");
  if (static_cast<int>(kinds.size()) != fh->d())
    throw Error(ErrorCode::UnsupportedD, "field was built for d=" + std::to_string(fh->d()) + " but " +
                                             std::to_string(kinds.size()) + " blocks were given");
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "n must be nonnegative");
  FramedSetup<F> s;
  s.field = fh;
  s.d = static_cast<int>(kinds.size());
  s.n = n;
  for (const auto& k : kinds) {
    s.packs.push_back(r_pack(k, fh));
    s.block_offset.push_back(s.dim_v);
    s.block_dim.push_back(static_cast<std::size_t>(k.vector_dim()));
    for (int l = 0; l < k.vector_dim(); ++l) {
      s.label.push_back(static_cast<int>(s.block_dim.size()) - 1);
      s.local.push_back(static_cast<std::size_t>(l));
    }
    s.dim_v += static_cast<std::size_t>(k.vector_dim());
  }
  if (boundary) {
    if (boundary->size() != kinds.size())
      throw Error(ErrorCode::UnsupportedBoundary, "need one boundary module per block");
    for (const auto& b : *boundary)
      if (!(b == boundary->front()))
        throw Error(ErrorCode::UnsupportedBoundary, "boundary modules must be equal across blocks");
    s.boundary = boundary;
    for (int b = 0; b < s.d; ++b) {
      s.K.push_back(double_braiding(s.packs[b], (*boundary)[b]));
      s.K_inv.push_back(inverse(s.K.back()));
      s.m_dim.push_back(static_cast<std::size_t>((*boundary)[b].dim(kinds[b])));
      s.dim_m *= s.m_dim.back();
    }
  }
  std::size_t amb = s.dim_m;
  for (int i = 0; i < n; ++i) {
    if (amb > (std::size_t{1} << 31) / std::max<std::size_t>(s.dim_v, 1))
      throw Error(ErrorCode::DimensionOverflow, "ambient dimension too large for " + s.describe());
    amb *= s.dim_v;
  }
  return s;
}

namespace detail {

template <class F>
void require_leg(const FramedSetup<F>& s, int i, int lo, int hi) {
  if (i < lo || i > hi)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(i) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

// Place an operator on legs i..i+k-1 (1-based) of the ambient space.
template <class F>
SparseMatrix<F> on_legs(const FramedSetup<F>& s, const SparseMatrix<F>& local, int i, int k) {
  return embed(local, s.dim_m * ipow(s.dim_v, i - 1), ipow(s.dim_v, s.n - i - k + 1));
}

template <class F>
SparseMatrix<F> diag_from(const FramedSetup<F>& s, const std::function<bool(std::size_t)>& keep) {
  const F& f = *s.field;
  std::vector<typename F::Elem> dg(s.ambient(), f.zero());
  for (std::size_t x = 0; x < dg.size(); ++x)
    if (keep(x)) dg[x] = f.one();
  return SparseMatrix<F>::diag(s.field, dg);
}

// Two-leg operator: the given block matrices on V_b (x) V_b, the flip elsewhere.
template <class F>
SparseMatrix<F> two_leg(const FramedSetup<F>& s, bool inverse_r) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  std::size_t m = s.dim_v;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (s.label[x] != s.label[y]) t.emplace_back(static_cast<std::uint32_t>(y * m + x), static_cast<std::uint32_t>(x * m + y), s.field->one());
  for (int b = 0; b < s.d; ++b) {
    const auto& r = inverse_r ? s.packs[b].R_inv : s.packs[b].R;
    std::size_t nb = s.block_dim[b], off = s.block_offset[b];
    for (std::size_t row = 0; row < r.dim(); ++row)
      for (std::size_t k = r.row_begin(row); k < r.row_end(row); ++k) {
        std::size_t col = r.col(k);
        std::size_t gr = (off + row / nb) * m + off + row % nb, gc = (off + col / nb) * m + off + col % nb;
        t.emplace_back(static_cast<std::uint32_t>(gr), static_cast<std::uint32_t>(gc), r.val(k));
      }
  }
  return SparseMatrix<F>::from_triplets(s.field, m * m, std::move(t));
}

template <class F>
SparseMatrix<F> two_leg_match(const FramedSetup<F>& s) {
  std::vector<typename F::Elem> dg(s.dim_v * s.dim_v, s.field->zero());
  for (std::size_t x = 0; x < s.dim_v; ++x)
    for (std::size_t y = 0; y < s.dim_v; ++y)
      if (s.label[x] == s.label[y]) dg[x * s.dim_v + y] = s.field->one();
  return SparseMatrix<F>::diag(s.field, dg);
}

// K^(b) acting on (M_b, first leg) when the first leg lies in V_b.
template <class F>
SparseMatrix<F> boundary_leg(const FramedSetup<F>& s, bool inv) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  std::size_t m = s.dim_v;
  // strides of the M factors
  std::vector<std::size_t> stride(s.d, 1);
  for (int b = s.d - 2; b >= 0; --b) stride[b] = stride[b + 1] * s.m_dim[b + 1];
  for (std::size_t mi = 0; mi < s.dim_m; ++mi)
    for (std::size_t x = 0; x < m; ++x) {
      int b = s.label[x];
      const auto& k = inv ? s.K_inv[b] : s.K[b];
      std::size_t nb = s.block_dim[b], mb = (mi / stride[b]) % s.m_dim[b];
      std::size_t kc = mb * nb + s.local[x];
      std::size_t base = mi - mb * stride[b];
      // column kc of K: scan rows (K is small)
      for (std::size_t kr = 0; kr < k.dim(); ++kr) {
        auto v = k.at(kr, kc);
        if (s.field->is_zero(v)) continue;
        std::size_t mi2 = base + (kr / nb) * stride[b], x2 = s.block_offset[b] + kr % nb;
        t.emplace_back(static_cast<std::uint32_t>(mi2 * m + x2), static_cast<std::uint32_t>(mi * m + x), v);
      }
    }
  return SparseMatrix<F>::from_triplets(s.field, s.dim_m * m, std::move(t));
}

}  // namespace detail

template <class F>
SparseMatrix<F> tau(const FramedSetup<F>& s, int i) {
  detail::require_leg(s, i, 1, s.n);
  const F& f = *s.field;
  std::vector<typename F::Elem> dg(s.dim_v);
  for (std::size_t x = 0; x < s.dim_v; ++x) dg[x] = f.pow(f.zeta(), s.label[x]);
  return detail::on_legs(s, SparseMatrix<F>::diag(s.field, dg), i, 1);
}

template <class F>
SparseMatrix<F> sigma(const FramedSetup<F>& s, int i) {
  detail::require_leg(s, i, 1, s.n - 1);
  return detail::on_legs(s, detail::two_leg(s, false), i, 2);
}

template <class F>
SparseMatrix<F> sigma_inv(const FramedSetup<F>& s, int i) {
  detail::require_leg(s, i, 1, s.n - 1);
  return detail::on_legs(s, detail::two_leg(s, true), i, 2);
}

template <class F>
SparseMatrix<F> epsilon(const FramedSetup<F>& s, int i, int j) {
  detail::require_leg(s, i, 1, s.n);
  detail::require_leg(s, j, 1, s.n);
  if (i == j) throw Error(ErrorCode::EqualIndices, "epsilon needs two distinct legs");
  if (std::abs(i - j) == 1) return detail::on_legs(s, detail::two_leg_match(s), std::min(i, j), 2);
  return detail::diag_from<F>(s, [&](std::size_t x) { return s.leg_label(x, i) == s.leg_label(x, j); });
}

// e_i = eps_i - (sigma_i - sigma_i^-1) / (q - q^-1)
template <class F>
SparseMatrix<F> e_op(const FramedSetup<F>& s, int i) {
  detail::require_leg(s, i, 1, s.n - 1);
  const F& f = *s.field;
  auto c = f.inv(detail::qdiff(f));
  auto loc = axpby(f.one(), detail::two_leg_match(s), f.neg(c), sub(detail::two_leg(s, false), detail::two_leg(s, true)));
  return detail::on_legs(s, loc, i, 2);
}

template <class F>
SparseMatrix<F> proj_EI(const FramedSetup<F>& s, const OrderedPartition& I) {
  if (I.d != s.d || I.n() != s.n) throw Error(ErrorCode::BadPartition, "ordered partition does not match the setup");
  return detail::diag_from<F>(s, [&](std::size_t x) {
    for (int i = 1; i <= s.n; ++i)
      if (s.leg_label(x, i) != I.label[i - 1]) return false;
    return true;
  });
}

template <class F>
SparseMatrix<F> proj_nu(const FramedSetup<F>& s, const Composition& nu) {
  int total = 0;
  for (int v : nu) {
    if (v < 0) throw Error(ErrorCode::BadComposition, "negative part in " + to_string(nu));
    total += v;
  }
  if (static_cast<int>(nu.size()) != s.d || total != s.n)
    throw Error(ErrorCode::BadComposition, to_string(nu) + " is not a composition of n=" + std::to_string(s.n) + " into d=" + std::to_string(s.d) + " parts");
  return detail::diag_from<F>(s, [&](std::size_t x) {
    std::vector<int> c(s.d, 0);
    for (int i = 1; i <= s.n; ++i) ++c[s.leg_label(x, i)];
    return c == nu;
  });
}

// w is a permutation of {1..d}; V_a goes to V_{w(a)} (and M_a to M_{w(a)}).
template <class F>
SparseMatrix<F> sd_perm(const FramedSetup<F>& s, const std::vector<int>& w) {
  if (!s.homogeneous()) throw Error(ErrorCode::HeterogeneousBlocks, "the S_d action needs identical blocks");
  std::vector<int> w0(w.size());
  std::vector<bool> seen(s.d, false);
  if (static_cast<int>(w.size()) != s.d) throw Error(ErrorCode::BadPartition, "permutation has the wrong size");
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (w[a] < 1 || w[a] > s.d || seen[w[a] - 1]) throw Error(ErrorCode::BadPartition, "not a permutation of 1..d");
    seen[w[a] - 1] = true;
    w0[a] = w[a] - 1;
  }
  std::size_t nb = s.block_dim.front(), legs = s.legs_dim();
  std::vector<std::size_t> mstride(s.d, 1);
  if (s.has_boundary())
    for (int b = s.d - 2; b >= 0; --b) mstride[b] = mstride[b + 1] * s.m_dim[b + 1];
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  t.reserve(s.ambient());
  for (std::size_t mi = 0; mi < s.dim_m; ++mi) {
    std::size_t mi2 = 0;
    for (int b = 0; b < s.d && s.has_boundary(); ++b) mi2 += ((mi / mstride[b]) % s.m_dim[b]) * mstride[w0[b]];
    for (std::size_t x = 0; x < legs; ++x) {
      std::size_t rest = x, y = 0, place = 1;
      for (int i = 0; i < s.n; ++i) {
        std::size_t v = rest % s.dim_v;
        rest /= s.dim_v;
        y += (static_cast<std::size_t>(w0[s.label[v]]) * nb + s.local[v]) * place;
        place *= s.dim_v;
      }
      t.emplace_back(static_cast<std::uint32_t>(mi2 * legs + y), static_cast<std::uint32_t>(mi * legs + x), s.field->one());
    }
  }
  return SparseMatrix<F>::from_triplets(s.field, s.ambient(), std::move(t));
}

template <class F>
SparseMatrix<F> sigma0(const FramedSetup<F>& s, bool inv = false) {
  if (!s.has_boundary()) throw Error(ErrorCode::NoBoundary, "sigma_0 needs a boundary module");
  if (s.n < 1) throw Error(ErrorCode::IndexOutOfRange, "sigma_0 needs n >= 1");
  return embed(detail::boundary_leg(s, inv), 1, detail::ipow(s.dim_v, s.n - 1));
}

enum class Preset { Framed, Affine, Tied };

std::string preset_name(Preset p);

// Generator symbols: t<i>, s<i>, s<i>^-1, E<i> (= E_{i,i+1}), E<i>,<j>, e<i>, s0, s0^-1.
template <class F>
class GeneratorAssignment {
 public:
  GeneratorAssignment(const FramedSetup<F>& setup, Preset preset) : setup_(setup), preset_(preset) {}

  const FramedSetup<F>& setup() const { return setup_; }
  Preset preset() const { return preset_; }

  // Matrix of a symbol; built on first use.
  const SparseMatrix<F>& get(const std::string& sym) const {
    std::lock_guard<std::mutex> lock(*mu_);
    auto it = cache_.find(sym);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(sym, build(sym)).first->second;
  }

  bool has(const std::string& sym) const {
    try {
      get(sym);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  // Symbols whose images generate the image algebra.
  std::vector<std::string> generating_symbols() const {
    std::vector<std::string> out;
    int n = setup_.n;
    if (preset_ != Preset::Tied)
      for (int i = 1; i <= n; ++i) out.push_back("t" + std::to_string(i));
    for (int i = 1; i < n; ++i) {
      out.push_back("s" + std::to_string(i));
      if (preset_ == Preset::Tied) {
        out.push_back("s" + std::to_string(i) + "^-1");
        out.push_back("E" + std::to_string(i));
      }
    }
    if (preset_ == Preset::Affine) out.push_back("s0");
    return out;
  }

  std::vector<SparseMatrix<F>> generators() const {
    std::vector<SparseMatrix<F>> out;
    for (const auto& s : generating_symbols()) out.push_back(get(s));
    if (out.empty()) out.push_back(SparseMatrix<F>::identity(setup_.field, setup_.ambient()));
    return out;
  }

 private:
  static int parse_index(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error(ErrorCode::UnresolvedSymbol, "missing index in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  SparseMatrix<F> build(const std::string& sym) const {
    if (sym.empty()) throw Error(ErrorCode::UnresolvedSymbol, "empty symbol");
    char head = sym[0];
    std::size_t pos = 1;
    int i = parse_index(sym, pos);
    bool inverse = false;
    int j = -1;
    if (pos < sym.size() && sym[pos] == ',') {
      ++pos;
      j = parse_index(sym, pos);
    }
    if (sym.compare(pos, std::string::npos, "^-1") == 0) {
      inverse = true;
      pos = sym.size();
    }
    if (pos != sym.size()) throw Error(ErrorCode::UnresolvedSymbol, "cannot read symbol '" + sym + "'");
    bool tied = preset_ == Preset::Tied;
    switch (head) {
      case 't':
        if (tied || inverse || j >= 0) break;
        return tau(setup_, i);
      case 's':
        if (j >= 0) break;
        if (i == 0) {
          if (preset_ != Preset::Affine) break;
          return sigma0(setup_, inverse);
        }
        return inverse ? sigma_inv(setup_, i) : sigma(setup_, i);
      case 'E':
        if (inverse) break;
        return epsilon(setup_, i, j >= 0 ? j : i + 1);
      case 'e':
        if (inverse || j >= 0) break;
        return e_op(setup_, i);
      default:
        break;
    }
    if (head == 's' && i == 0 && !setup_.has_boundary())
      throw Error(ErrorCode::NoBoundary, "s0 needs a boundary module");
    throw Error(ErrorCode::UnresolvedSymbol, "symbol '" + sym + "' is not available in the " + preset_name(preset_) + " preset");
  }

  FramedSetup<F> setup_;
  Preset preset_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
  mutable std::map<std::string, SparseMatrix<F>> cache_;
};

template <class F>
GeneratorAssignment<F> assignment_for(const FramedSetup<F>& setup, Preset preset) {
  if (preset == Preset::Affine && !setup.has_boundary()) throw Error(ErrorCode::NoBoundary, "affine preset needs a boundary module");
  if (preset == Preset::Tied && !setup.homogeneous())
    throw Error(ErrorCode::HeterogeneousBlocks, "tied preset needs identical blocks");
  return GeneratorAssignment<F>(setup, preset);
}

}  // namespace framiz
