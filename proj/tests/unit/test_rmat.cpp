#include "doctest.h"
#include "framiz/echelon.hpp"
#include "framiz/rmat.hpp"

using namespace framiz;

namespace {

ModularHandle modfield(u64 seed = 3) {
  return std::get<ModularHandle>(make_field({Backend::Modular, 1, false, std::nullopt, primes_for(1, 1)[0], seed}));
}
ExactHandle exfield() { return std::get<ExactHandle>(make_field({Backend::Exact, 1})); }

template <class F>
std::size_t rank_of(const SparseMatrix<F>& m) {
  EchelonBasis<F> eb(m.handle());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    SparseVec<F> v;
    for (std::size_t k = m.row_begin(i); k < m.row_end(i); ++k) {
      v.idx.push_back(m.col(k));
      v.val.push_back(m.val(k));
    }
    eb.insert(v);
  }
  return eb.rank();
}

template <class F>
SparseMatrix<F> shifted(const SparseMatrix<F>& m, const typename F::Elem& c) {
  const F& f = m.field();
  return axpby(f.one(), m, f.neg(c), SparseMatrix<F>::identity(m.handle(), m.dim()));
}

// Plain dense product over F_p, independent of the sparse kernels.
std::vector<std::vector<u64>> dense(const SparseMatrix<ModularField>& m) {
  const auto& f = m.field();
  std::vector<std::vector<u64>> d(m.dim(), std::vector<u64>(m.dim(), 0));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = m.row_begin(i); k < m.row_end(i); ++k) d[i][m.col(k)] = f.value(m.val(k));
  return d;
}

std::vector<std::vector<u64>> dmul(const std::vector<std::vector<u64>>& a, const std::vector<std::vector<u64>>& b, u64 p) {
  std::size_t n = a.size();
  std::vector<std::vector<u64>> c(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + mulmod_u64(a[i][k], b[k][j], p)) % p;
  return c;
}

std::vector<std::vector<u64>> dkron_id(const std::vector<std::vector<u64>>& a, std::size_t left, std::size_t right) {
  std::size_t n = a.size(), big = left * n * right;
  std::vector<std::vector<u64>> c(big, std::vector<u64>(big, 0));
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < right; ++r) c[(l * n + i) * right + r][(l * n + j) * right + r] = a[i][j];
  return c;
}

template <class F>
void check_commutes(const SparseMatrix<F>& a, const std::vector<SparseMatrix<F>>& xs) {
  for (const auto& x : xs) CHECK(equal(mul(a, x), mul(x, a)));
}

}  // namespace

TEST_CASE("GL braid matrices") {
  auto f = exfield();
  auto p1 = r_gl(1, f);
  CHECK(p1.R.dim() == 1);
  CHECK(f->eq(p1.R.at(0, 0), f->q()));

  auto m = modfield();
  auto p2 = r_gl(2, m);
  CHECK(rank_of(shifted(p2.R, m->neg(m->inv(m->q())))) == 3);
  CHECK(rank_of(shifted(p2.R, m->q())) == 1);

  // braid identity recomputed with dense arithmetic
  u64 p = m->prime();
  auto d = dense(p2.R);
  auto r1 = dkron_id(d, 1, 2), r2 = dkron_id(d, 2, 1);
  CHECK(dmul(dmul(r1, r2, p), r1, p) == dmul(dmul(r2, r1, p), r2, p));

  for (int N = 1; N <= 4; ++N) {
    auto pe = r_gl(N, f);
    CHECK_NOTHROW(pe.self_test());
    auto qd = f->sub(f->q(), f->inv(f->q()));
    // s^2 = (q - q^-1) s + 1
    CHECK(equal(mul(pe.R, pe.R), axpby(qd, pe.R, f->one(), SparseMatrix<ExactField>::identity(f, N * N))));
  }
}

TEST_CASE("BMW braid matrices") {
  auto m = modfield();
  for (auto name : {"SO4", "SO6", "SO8", "SP2", "SP4", "SP6"}) {
    auto kind = parse_block_kind(name);
    auto pk = r_bmw(kind, m);
    CHECK(pk.e.has_value());
    // SP(2): the antisymmetric square is the trivial summand, so only two eigenvalues
    CHECK(pk.eigenvalues.size() == (kind == BlockKind{Family::SP, 1} ? 2u : 3u));
    auto cubic = std::vector<ModularField::Elem>{m->q(), m->neg(m->inv(m->q())), m->inv(pk.a_value())};
    CHECK(detail::poly_of_roots(pk.R, cubic).is_zero());
    // no proper factor of the eigenvalue polynomial annihilates R
    for (std::size_t drop = 0; drop < pk.eigenvalues.size(); ++drop) {
      auto fewer = pk.eigenvalues;
      fewer.erase(fewer.begin() + drop);
      CHECK_FALSE(detail::poly_of_roots(pk.R, fewer).is_zero());
    }
  }
  CHECK(parse_block_kind("SO4").a_power() == SignedPower{1, 3});
  CHECK(parse_block_kind("SP2").a_power() == SignedPower{-1, 3});

  auto f = exfield();
  for (auto name : {"SO4", "SP2"}) {
    auto pk = r_bmw(parse_block_kind(name), f);
    auto av = pk.a_value(), ai = f->inv(av);
    auto delta = f->add(f->mul(f->sub(av, ai), f->inv(f->sub(f->q(), f->inv(f->q())))), f->one());
    CHECK(equal(mul(*pk.e, *pk.e), scale(delta, *pk.e)));
  }

  // a wrong normalization is caught by the self test
  auto pk = r_bmw(parse_block_kind("SO4"), m);
  pk.a = SignedPower{1, 1};
  pk.eigenvalues.back() = m->inv(m->q());
  try {
    pk.self_test();
    FAIL("expected BadNormalization");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadNormalization);
  }
}

TEST_CASE("block kind parsing") {
  CHECK(parse_block_kind("GL(3)") == BlockKind{Family::GL, 3});
  CHECK(parse_block_kind("so6") == BlockKind{Family::SO, 3});
  CHECK(parse_block_kind("SP(2)").vector_dim() == 2);
  CHECK(parse_block_kind("SO(4)").str() == "SO(4)");
  for (auto bad : {"SO5", "SO2", "SP3", "XX2", "GL", "GL0", "GLx"}) {
    try {
      parse_block_kind(bad);
      FAIL("expected UnsupportedKind");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedKind);
    }
  }
  CHECK(parse_boundary("V").type == BoundaryRep::Type::Vector);
  CHECK(parse_boundary("Sym^2").k == 2);
  CHECK(parse_boundary("Sym0").k == 0);
  CHECK_THROWS_AS(parse_boundary("Sym-1"), Error);
  CHECK_THROWS_AS(parse_boundary("W"), Error);
}

TEST_CASE("q-antisymmetrizer") {
  auto m = modfield();
  CHECK(antisymmetrizer3(r_gl(2, m), 3, 1).is_zero());
  CHECK(antisymmetrizer3(r_gl(2, m), 4, 2).is_zero());
  auto a3 = antisymmetrizer3(r_gl(3, m), 3, 1);
  CHECK_FALSE(a3.is_zero());
  CHECK(rank_of(a3) == 1);
  CHECK(rank_of(antisymmetrizer3(r_gl(4, m), 3, 1)) == 4);
  CHECK(antisymmetrizer3(r_gl(1, m), 3, 1).is_zero());
  CHECK_THROWS_AS(antisymmetrizer3(r_gl(2, m), 3, 2), Error);
  CHECK_THROWS_AS(antisymmetrizer3(r_bmw(parse_block_kind("SO4"), m), 3, 1), Error);
}

TEST_CASE("Chevalley actions commute with the braiding") {
  auto f = exfield();
  auto gens = chevalley_action(BlockKind{Family::GL, 2}, 1, f);
  REQUIRE(gens.size() == 4);
  auto q = f->q(), qi = f->inv(q);
  CHECK(equal(gens[0], SparseMatrix<ExactField>::from_triplets(f, 2, {{0, 1, f->one()}})));
  CHECK(equal(gens[1], SparseMatrix<ExactField>::from_triplets(f, 2, {{1, 0, f->one()}})));
  CHECK(equal(gens[2], SparseMatrix<ExactField>::diag(f, {q, qi})));

  auto m = modfield();
  for (int N : {2, 3}) {
    auto pk = r_gl(N, m);
    for (int n = 2; n <= 3; ++n) {
      auto act = chevalley_action(BlockKind{Family::GL, N}, n, m);
      CHECK(act.size() == static_cast<std::size_t>(4 * (N - 1)));
      for (int i = 1; i < n; ++i) check_commutes(leg_operator(pk.R, N, n, i), act);
    }
  }
  CHECK_THROWS_AS(chevalley_action(parse_block_kind("SO4"), 2, m), Error);
}

TEST_CASE("double braiding") {
  auto m = modfield();
  auto pk = r_gl(2, m);
  auto q = m->q();
  auto kv = double_braiding(pk, BoundaryRep{});
  CHECK(equal(kv, mul(pk.R, pk.R)));
  CHECK(detail::poly_of_roots(kv, {m->pow(q, 2), m->pow(q, -2)}).is_zero());

  auto k0 = double_braiding(pk, parse_boundary("Sym0"));
  CHECK(equal(k0, SparseMatrix<ModularField>::identity(m, 2)));

  for (int k = 0; k <= 4; ++k) {
    auto b = BoundaryRep{BoundaryRep::Type::Sym, k};
    auto kk = double_braiding(pk, b);
    CHECK(kk.dim() == static_cast<std::size_t>(2 * (k + 1)));
    // Sym^k (x) V = Sym^{k+1} + Sym^{k-1}: eigenvalues q^{2k} and q^{-2}
    if (k > 0) {
      CHECK(rank_of(shifted(kk, m->pow(q, 2 * k))) == static_cast<std::size_t>(k));
      CHECK(rank_of(shifted(kk, m->pow(q, -2))) == static_cast<std::size_t>(k + 2));
      CHECK(detail::poly_of_roots(kk, {m->pow(q, 2 * k), m->pow(q, -2)}).is_zero());
    }
    auto act = tensor_action(boundary_action(pk.kind, b, m), vector_action(2, m));
    check_commutes(kk, act.all());
  }
  CHECK_THROWS_AS(double_braiding(r_gl(3, m), parse_boundary("Sym2")), Error);
  auto so = r_bmw(parse_block_kind("SO4"), m);
  CHECK(equal(double_braiding(so, BoundaryRep{}), mul(so.R, so.R)));
}
