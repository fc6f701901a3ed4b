#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framiz/kernels.hpp"
#include "framiz/modular.hpp"
#include "framiz/sparse.hpp"

namespace framiz {

enum class Family { GL, SO, SP };

// GL(N) acts on C^N; SO(2N) and SP(2N) on C^{2N}.
struct BlockKind {
  Family family = Family::GL;
  int N = 1;

  int vector_dim() const { return family == Family::GL ? N : 2 * N; }
  bool is_bmw() const { return family != Family::GL; }
  // a = q^{dim-1} (SO) or -q^{dim+1} (SP), dim the vector dimension
  std::optional<SignedPower> a_power() const;
  std::string str() const;  // "GL(2)", "SO(4)", "SP(2)"
  bool operator==(const BlockKind&) const = default;
};

// Accepts "GL2", "GL(2)", "so4", "SO(4)", "SP(2)"... The number is the vector
// dimension, which must be even for SO and SP.
BlockKind parse_block_kind(const std::string& s);

struct BoundaryRep {
  enum class Type { Vector, Sym };
  Type type = Type::Vector;
  int k = 1;  // Sym^k

  int dim(const BlockKind& kind) const { return type == Type::Vector ? kind.vector_dim() : k + 1; }
  std::string str() const { return type == Type::Vector ? "V" : "Sym" + std::to_string(k); }
  bool operator==(const BoundaryRep&) const = default;
};

BoundaryRep parse_boundary(const std::string& s);  // "V", "Sym2", "Sym^2"

namespace detail {

template <class F>
typename F::Elem qpow(const F& f, long long k) {
  return f.pow(f.q(), k);
}

template <class F>
typename F::Elem qdiff(const F& f) {
  return f.sub(f.q(), f.inv(f.q()));
}

template <class F>
typename F::Elem signed_qpow(const F& f, const SignedPower& sp) {
  auto x = qpow(f, sp.exponent);
  return sp.sign < 0 ? f.neg(x) : x;
}

template <class F>
typename F::Elem qint(const F& f, int n) {
  return f.mul(f.sub(qpow(f, n), qpow(f, -n)), f.inv(qdiff(f)));
}

// prod (A - r) over the listed r
template <class F>
SparseMatrix<F> poly_of_roots(const SparseMatrix<F>& a, const std::vector<typename F::Elem>& roots) {
  const F& f = a.field();
  auto id = SparseMatrix<F>::identity(a.handle(), a.dim());
  SparseMatrix<F> acc = id;
  for (const auto& r : roots) acc = mul(acc, axpby(f.one(), a, f.neg(r), id));
  return acc;
}

template <class F>
void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadNormalization, what);
}

// Flip X (x) Y -> Y (x) X as a matrix on the ordered product X (x) Y.
template <class F>
SparseMatrix<F> flip(const FieldHandle<F>& fh, std::size_t nx, std::size_t ny) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      t.emplace_back(static_cast<std::uint32_t>(b * nx + a), static_cast<std::uint32_t>(a * ny + b), fh->one());
  return SparseMatrix<F>::from_triplets(fh, nx * ny, std::move(t));
}

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace detail

template <class F>
struct RMatrixPack {
  BlockKind kind;
  FieldHandle<F> field;
  SparseMatrix<F> R, R_inv;
  std::optional<SparseMatrix<F>> e;  // BMW kinds only
  std::vector<typename F::Elem> eigenvalues;
  std::optional<SignedPower> a;

  std::size_t dim() const { return static_cast<std::size_t>(kind.vector_dim()); }
  typename F::Elem a_value() const { return detail::signed_qpow(*field, *a); }

  // Re-checks every defining relation; throws BadNormalization on failure.
  void self_test() const {
    using detail::require;
    const F& f = *field;
    std::size_t m = dim();
    auto id = SparseMatrix<F>::identity(field, m * m);
    require<F>(equal(mul(R, R_inv), id), kind.str() + ": R_inv is not the inverse");
    auto r1 = embed(R, 1, m), r2 = embed(R, m, 1);
    require<F>(equal(mul(mul(r1, r2), r1), mul(mul(r2, r1), r2)), kind.str() + ": braid relation fails");
    require<F>(detail::poly_of_roots(R, eigenvalues).is_zero(), kind.str() + ": eigenvalue polynomial does not annihilate R");
    if (!kind.is_bmw()) return;
    auto av = a_value(), ai = f.inv(av);
    const auto& ee = *e;
    require<F>(equal(mul(ee, R), scale(ai, ee)), kind.str() + ": e R != a^-1 e");
    auto delta = f.add(f.mul(f.sub(av, ai), f.inv(detail::qdiff(f))), f.one());
    require<F>(equal(mul(ee, ee), scale(delta, ee)), kind.str() + ": e^2 != delta e");
    auto e1 = embed(ee, 1, m), e2 = embed(ee, m, 1);
    require<F>(equal(mul(mul(e1, e2), e1), e1) && equal(mul(mul(e2, e1), e2), e2), kind.str() + ": e_i e_j e_i != e_i");
    auto r2i = embed(R_inv, m, 1);
    require<F>(equal(mul(mul(e1, r2), e1), scale(av, e1)) && equal(mul(mul(e1, r2i), e1), scale(ai, e1)),
               kind.str() + ": e_1 s_2^{+-1} e_1 != a^{+-1} e_1");
  }
};

template <class F>
RMatrixPack<F> r_gl(int N, const FieldHandle<F>& fh) {
  if (N < 1) throw Error(ErrorCode::UnsupportedKind, "GL(N) needs N >= 1");
  const F& f = *fh;
  auto q = f.q(), c = detail::qdiff(f);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto col = static_cast<std::uint32_t>(i * N + j);
      if (i == j) {
        t.emplace_back(col, col, q);
        continue;
      }
      t.emplace_back(static_cast<std::uint32_t>(j * N + i), col, f.one());
      if (i > j) t.emplace_back(col, col, c);
    }
  RMatrixPack<F> p;
  p.kind = {Family::GL, N};
  p.field = fh;
  p.R = SparseMatrix<F>::from_triplets(fh, N * N, std::move(t));
  // Hecke: R^-1 = R - (q - q^-1)
  p.R_inv = axpby(f.one(), p.R, f.neg(c), SparseMatrix<F>::identity(fh, N * N));
  p.eigenvalues = {q};
  if (N > 1) p.eigenvalues.push_back(f.neg(f.inv(q)));
  p.self_test();
  return p;
}

template <class F>
RMatrixPack<F> r_bmw(const BlockKind& kind, const FieldHandle<F>& fh) {
  if (!kind.is_bmw() || kind.N < 1) throw Error(ErrorCode::UnsupportedKind, kind.str() + " is not an SO/SP kind");
  const F& f = *fh;
  const int n = kind.N, m = 2 * n;
  auto q = f.q(), qi = f.inv(q), c = detail::qdiff(f);
  std::vector<int> rho(m), eps(m, 1);
  for (int i = 0; i < n; ++i) {
    rho[i] = kind.family == Family::SO ? n - 1 - i : n - i;
    rho[m - 1 - i] = -rho[i];
    if (kind.family == Family::SP) eps[m - 1 - i] = -1;
  }
  auto prime = [m](int i) { return m - 1 - i; };
  // entries of R on (row pair, column pair); the flip is applied to rows afterwards
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  auto put = [&](int a, int b, int cc, int d, typename F::Elem v) {
    // R (a,b) <- (cc,d); after the flip the row becomes (b,a)
    t.emplace_back(static_cast<std::uint32_t>(b * m + a), static_cast<std::uint32_t>(cc * m + d), v);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j)
        put(i, i, i, i, q);
      else if (j == prime(i))
        put(i, j, i, j, qi);
      else
        put(i, j, i, j, f.one());
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      put(i, j, j, i, c);
      auto v = f.mul(c, detail::qpow(f, rho[i] - rho[j]));
      if (eps[i] * eps[j] > 0) v = f.neg(v);
      put(i, prime(i), j, prime(j), v);
    }
  RMatrixPack<F> p;
  p.kind = kind;
  p.field = fh;
  p.R = SparseMatrix<F>::from_triplets(fh, m * m, std::move(t));
  p.R_inv = inverse(p.R);
  p.a = kind.a_power();
  auto id = SparseMatrix<F>::identity(fh, m * m);
  p.e = sub(id, scale(f.inv(c), sub(p.R, p.R_inv)));
  p.eigenvalues = {q, f.neg(qi), f.inv(p.a_value())};
  if (kind.family == Family::SP && n == 1) p.eigenvalues.erase(p.eigenvalues.begin() + 1);
  p.self_test();
  return p;
}

template <class F>
RMatrixPack<F> r_pack(const BlockKind& kind, const FieldHandle<F>& fh) {
  return kind.is_bmw() ? r_bmw(kind, fh) : r_gl(kind.N, fh);
}

// 1 - q^-1 s1 - q^-1 s2 + q^-2 s1 s2 + q^-2 s2 s1 - q^-3 s1 s2 s1
template <class F>
SparseMatrix<F> q_antisymmetrizer(const SparseMatrix<F>& s1, const SparseMatrix<F>& s2) {
  const F& f = s1.field();
  auto qi = f.inv(f.q());
  auto qi2 = f.mul(qi, qi), qi3 = f.mul(qi2, qi);
  auto s12 = mul(s1, s2), s21 = mul(s2, s1), s121 = mul(s12, s1);
  auto out = SparseMatrix<F>::identity(s1.handle(), s1.dim());
  out = axpby(f.one(), out, f.neg(qi), s1);
  out = axpby(f.one(), out, f.neg(qi), s2);
  out = axpby(f.one(), out, qi2, s12);
  out = axpby(f.one(), out, qi2, s21);
  return axpby(f.one(), out, f.neg(qi3), s121);
}

// Braid generator s_i (1-based) of the pack on V^{(x) n}.
template <class F>
SparseMatrix<F> leg_operator(const SparseMatrix<F>& two_leg, std::size_t m, int n, int i) {
  if (i < 1 || i > n - 1) throw Error(ErrorCode::IndexOutOfRange, "leg index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
  return embed(two_leg, detail::ipow(m, i - 1), detail::ipow(m, n - i - 1));
}

template <class F>
SparseMatrix<F> antisymmetrizer3(const RMatrixPack<F>& pack, int n, int i) {
  if (pack.kind.is_bmw()) throw Error(ErrorCode::UnsupportedKind, "antisymmetrizer3 needs a GL pack");
  if (n < 3 || i < 1 || i > n - 2) throw Error(ErrorCode::IndexOutOfRange, "need n >= 3 and 1 <= i <= n-2");
  return q_antisymmetrizer(leg_operator(pack.R, pack.dim(), n, i), leg_operator(pack.R, pack.dim(), n, i + 1));
}

// Matrices of E_i, F_i, K_i, K_i^-1 (i = 1..N-1) on some module, in that order
// per i, plus the gl weights of the basis when known.
template <class F>
struct UqAction {
  std::vector<SparseMatrix<F>> E, Fm, K, Kinv;
  std::size_t dim = 0;

  std::vector<SparseMatrix<F>> all() const {
    std::vector<SparseMatrix<F>> out;
    for (std::size_t i = 0; i < E.size(); ++i) {
      out.push_back(E[i]);
      out.push_back(Fm[i]);
      out.push_back(K[i]);
      out.push_back(Kinv[i]);
    }
    return out;
  }
};

// Delta(E) = E (x) K + 1 (x) E, Delta(F) = F (x) 1 + K^-1 (x) F, Delta(K) = K (x) K
template <class F>
UqAction<F> tensor_action(const UqAction<F>& x, const UqAction<F>& y) {
  UqAction<F> out;
  out.dim = x.dim * y.dim;
  const auto& fh = y.E.empty() ? nullptr : y.E.front().handle();
  for (std::size_t i = 0; i < y.E.size(); ++i) {
    auto ix = SparseMatrix<F>::identity(fh, x.dim), iy = SparseMatrix<F>::identity(fh, y.dim);
    out.E.push_back(add(kron(x.E[i], y.K[i]), kron(ix, y.E[i])));
    out.Fm.push_back(add(kron(x.Fm[i], iy), kron(x.Kinv[i], y.Fm[i])));
    out.K.push_back(kron(x.K[i], y.K[i]));
    out.Kinv.push_back(kron(x.Kinv[i], y.Kinv[i]));
  }
  return out;
}

template <class F>
UqAction<F> vector_action(int N, const FieldHandle<F>& fh) {
  const F& f = *fh;
  UqAction<F> a;
  a.dim = static_cast<std::size_t>(N);
  for (int i = 0; i + 1 < N; ++i) {
    auto u = static_cast<std::uint32_t>(i);
    a.E.push_back(SparseMatrix<F>::from_triplets(fh, N, {{u, u + 1, f.one()}}));
    a.Fm.push_back(SparseMatrix<F>::from_triplets(fh, N, {{u + 1, u, f.one()}}));
    std::vector<typename F::Elem> k(N, f.one()), ki(N, f.one());
    k[i] = f.q();
    k[i + 1] = f.inv(f.q());
    ki[i] = k[i + 1];
    ki[i + 1] = k[i];
    a.K.push_back(SparseMatrix<F>::diag(fh, k));
    a.Kinv.push_back(SparseMatrix<F>::diag(fh, ki));
  }
  return a;
}

// The trivial one-dimensional module with the same number of generators.
template <class F>
UqAction<F> trivial_action(int generators, const FieldHandle<F>& fh) {
  UqAction<F> a;
  a.dim = 1;
  for (int i = 0; i < generators; ++i) {
    a.E.emplace_back(fh, 1);
    a.Fm.emplace_back(fh, 1);
    a.K.push_back(SparseMatrix<F>::identity(fh, 1));
    a.Kinv.push_back(SparseMatrix<F>::identity(fh, 1));
  }
  return a;
}

// Sym^k of the GL(2) vector representation in the basis w_0..w_k:
// F w_j = w_{j+1}, E w_j = [j][k-j+1] w_{j-1}, K w_j = q^{k-2j} w_j,
// gl weight of w_j = (k-j, j).
template <class F>
struct SymModule {
  UqAction<F> action;
  std::vector<int> h1, h2;
};

template <class F>
SymModule<F> sym_module(int k, const FieldHandle<F>& fh) {
  if (k < 0) throw Error(ErrorCode::UnsupportedBoundary, "Sym^k needs k >= 0");
  const F& f = *fh;
  std::size_t n = static_cast<std::size_t>(k) + 1;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> e, fm;
  std::vector<typename F::Elem> kd(n), kid(n);
  SymModule<F> s;
  for (int j = 0; j <= k; ++j) {
    auto u = static_cast<std::uint32_t>(j);
    if (j < k) fm.emplace_back(u + 1, u, f.one());
    if (j >= 1) e.emplace_back(u - 1, u, f.mul(detail::qint(f, j), detail::qint(f, k - j + 1)));
    kd[j] = detail::qpow(f, k - 2 * j);
    kid[j] = detail::qpow(f, 2 * j - k);
    s.h1.push_back(k - j);
    s.h2.push_back(j);
  }
  s.action.dim = n;
  s.action.E.push_back(SparseMatrix<F>::from_triplets(fh, n, std::move(e)));
  s.action.Fm.push_back(SparseMatrix<F>::from_triplets(fh, n, std::move(fm)));
  s.action.K.push_back(SparseMatrix<F>::diag(fh, kd));
  s.action.Kinv.push_back(SparseMatrix<F>::diag(fh, kid));
  return s;
}

// Braiding X (x) Y -> Y (x) X from the universal R-matrix
// q^{H1 (x) H1 + H2 (x) H2} (1 + (q - q^-1) E (x) F).  The series stops after the
// linear term only when (E (x) F)^2 = 0, which holds whenever one side is V.
template <class F>
SparseMatrix<F> braiding(const SymModule<F>& x, const SymModule<F>& y) {
  const auto& fh = x.action.K.front().handle();
  const F& f = *fh;
  std::size_t nx = x.action.dim, ny = y.action.dim;
  std::vector<typename F::Elem> dg(nx * ny);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) dg[a * ny + b] = detail::qpow(f, x.h1[a] * y.h1[b] + x.h2[a] * y.h2[b]);
  auto ef = kron(x.action.E.front(), y.action.Fm.front());
  if (!mul(ef, ef).is_zero()) throw Error(ErrorCode::UnsupportedBoundary, "braiding needs one factor to be the vector module");
  auto theta = axpby(f.one(), SparseMatrix<F>::identity(fh, nx * ny), detail::qdiff(f), ef);
  return mul(detail::flip(fh, nx, ny), mul(SparseMatrix<F>::diag(fh, dg), theta));
}

// K = R_{V,M} R_{M,V} on M (x) V_b.
template <class F>
SparseMatrix<F> double_braiding(const RMatrixPack<F>& pack, const BoundaryRep& boundary) {
  if (boundary.type == BoundaryRep::Type::Vector) {
    return mul(pack.R, pack.R);
  }
  if (pack.kind != BlockKind{Family::GL, 2})
    throw Error(ErrorCode::UnsupportedBoundary, boundary.str() + " is only available for GL(2) blocks");
  if (boundary.k < 0) throw Error(ErrorCode::UnsupportedBoundary, "Sym^k needs k >= 0");
  auto m = sym_module(boundary.k, pack.field), v = sym_module(1, pack.field);
  auto k = mul(braiding(v, m), braiding(m, v));
  // reflection equation K R K R = R K R K on M (x) V (x) V
  auto k1 = embed(k, 1, 2), r2 = embed(pack.R, m.action.dim, 1);
  detail::require<F>(equal(mul(mul(k1, r2), mul(k1, r2)), mul(mul(r2, k1), mul(r2, k1))),
                     "double braiding fails the reflection equation");
  return k;
}

// Quantum group action on the boundary module (for commutation checks).
template <class F>
UqAction<F> boundary_action(const BlockKind& kind, const BoundaryRep& boundary, const FieldHandle<F>& fh) {
  if (kind.is_bmw()) throw Error(ErrorCode::UnsupportedKind, "Chevalley actions are only implemented for GL kinds");
  if (boundary.type == BoundaryRep::Type::Vector) return vector_action(kind.N, fh);
  if (kind != BlockKind{Family::GL, 2}) throw Error(ErrorCode::UnsupportedBoundary, "Sym^k needs a GL(2) block");
  return sym_module(boundary.k, fh).action;
}

// E_i, F_i, K_i, K_i^-1 for every i, acting on V^{(x) n}.
template <class F>
std::vector<SparseMatrix<F>> chevalley_action(const BlockKind& kind, int n, const FieldHandle<F>& fh) {
  if (kind.is_bmw()) throw Error(ErrorCode::UnsupportedKind, "Chevalley actions are only implemented for GL kinds");
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "n must be nonnegative");
  auto v = vector_action(kind.N, fh);
  auto acc = trivial_action(kind.N - 1, fh);
  for (int j = 0; j < n; ++j) acc = tensor_action(acc, v);
  return acc.all();
}

}  // namespace framiz
