#include <random>

#include "doctest.h"
#include "framiz/closure.hpp"

using namespace framiz;

namespace {

ModularHandle modfield(int d = 1, u64 seed = 3) {
  return std::get<ModularHandle>(make_field({Backend::Modular, d, false, std::nullopt, primes_for(d, 1)[0], seed}));
}
ExactHandle exfield(int d = 1) { return std::get<ExactHandle>(make_field({Backend::Exact, d})); }

template <class F>
SparseVec<F> vec(const F& f, std::vector<long long> xs) {
  SparseVec<F> v;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i]) {
      v.idx.push_back(i);
      v.val.push_back(f.from_int(xs[i]));
    }
  return v;
}

// Hecke braid matrix for gl2 written out by hand in the basis 00,01,10,11.
template <class F>
SparseMatrix<F> hand_r_gl2(const FieldHandle<F>& fh) {
  const F& f = *fh;
  auto q = f.q(), c = f.sub(q, f.inv(q));
  return SparseMatrix<F>::from_triplets(fh, 4, {{0, 0, q}, {2, 1, f.one()}, {1, 2, f.one()}, {2, 2, c}, {3, 3, q}});
}

template <class F>
SparseMatrix<F> random_sparse(const FieldHandle<F>& fh, std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (u(rng) < density) t.emplace_back(i, j, fh->from_int(static_cast<long long>(rng() % 11) - 5));
  return SparseMatrix<F>::from_triplets(fh, n, std::move(t));
}

}  // namespace

TEST_CASE("rref small cases") {
  auto f = exfield();
  auto r = rref<ExactField>(f, {vec(*f, {1, 0}), vec(*f, {0, 1})});
  CHECK(r.rank == 2);
  CHECK(r.basis[0].idx == std::vector<std::uint64_t>{0});
  auto r2 = rref<ExactField>(f, {vec(*f, {1, 1}), vec(*f, {2, 2})});
  CHECK(r2.rank == 1);
  CHECK(r2.basis[0].idx == std::vector<std::uint64_t>{0, 1});
  CHECK(f->is_one(r2.basis[0].val[1]));
  CHECK(rref<ExactField>(f, {}).rank == 0);
}

TEST_CASE("rref is fully reduced with unit pivots") {
  auto f = modfield();
  std::mt19937_64 rng(4);
  std::vector<SparseVec<ModularField>> rows;
  for (int t = 0; t < 12; ++t) {
    std::vector<long long> xs(9);
    for (auto& x : xs) x = static_cast<long long>(rng() % 5) - 2;
    rows.push_back(vec(*f, xs));
  }
  auto r = rref<ModularField>(f, rows);
  CHECK(r.rank <= 9);
  for (std::size_t i = 0; i < r.rank; ++i) {
    CHECK(f->is_one(r.basis[i].val[0]));
    if (i) CHECK(r.basis[i].idx[0] > r.basis[i - 1].idx[0]);
    for (std::size_t j = 0; j < r.rank; ++j) {
      if (i == j) continue;
      auto p = r.basis[j].idx[0];
      CHECK(std::find(r.basis[i].idx.begin(), r.basis[i].idx.end(), p) == r.basis[i].idx.end());
    }
  }
}

TEST_CASE("closure of simple generator sets") {
  auto f = exfield();
  auto id4 = SparseMatrix<ExactField>::identity(f, 4);
  CHECK(subalgebra_dimension<ExactField>({id4}).dimension == 1);
  CHECK(subalgebra_dimension<ExactField>({hand_r_gl2(f)}).dimension == 2);
  auto m = modfield();
  CHECK(subalgebra_dimension<ModularField>({hand_r_gl2(m)}).dimension == 2);

  // a nilpotent Jordan block generates a 3-dimensional non-unital algebra
  auto j = SparseMatrix<ModularField>::from_triplets(m, 4, {{0, 1, m->one()}, {1, 2, m->one()}, {2, 3, m->one()}});
  ClosureOptions opt;
  opt.with_identity = false;
  CHECK(subalgebra_dimension<ModularField>({j}, opt).dimension == 3);
  CHECK(subalgebra_dimension<ModularField>({j}).dimension == 4);
}

TEST_CASE("closure is a fixed point, monotone, and independent of the kernel path") {
  auto f = modfield();
  std::mt19937_64 rng(12);
  auto a = random_sparse(f, 6, 0.15, rng);
  auto b = SparseMatrix<ModularField>::from_triplets(f, 6, {{0, 0, f->one()}, {1, 1, f->one()}});
  auto ra = subalgebra_dimension<ModularField>({a});
  auto rab = subalgebra_dimension<ModularField>({a, b});
  CHECK(ra.dimension <= rab.dimension);
  auto again = subalgebra_dimension<ModularField>(rab.elements);
  CHECK(again.dimension == rab.dimension);

  ClosureOptions serial;
  serial.exec = Exec::Serial;
  auto rs = subalgebra_dimension<ModularField>({a, b}, serial);
  CHECK(rs.dimension == rab.dimension);
  CHECK(rs.basis.pivots() == rab.basis.pivots());

  ClosureOptions capped;
  capped.rank_cap = 2;
  try {
    subalgebra_dimension<ModularField>({a, b}, capped);
    FAIL("expected DimensionOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionOverflow);
  }
}

TEST_CASE("serial and parallel products agree") {
  auto f = modfield();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    auto a = random_sparse(f, 40, 0.1, rng), b = random_sparse(f, 40, 0.1, rng);
    CHECK(equal(kernels::spmm_serial(a, b), kernels::spmm_omp(a, b)));
  }
  auto e = exfield(3);
  auto x = SparseMatrix<ExactField>::from_triplets(e, 3, {{0, 1, e->zeta()}, {1, 2, e->q()}, {2, 0, e->one()}});
  CHECK(equal(kernels::spmm_serial(x, x), kernels::spmm_omp(x, x)));
  CHECK(equal(power(x, 3), scale(e->mul(e->zeta(), e->q()), SparseMatrix<ExactField>::identity(e, 3))));
}

TEST_CASE("matrix helpers") {
  auto f = exfield();
  auto r = hand_r_gl2(f);
  auto ri = inverse(r);
  CHECK(equal(mul(r, ri), SparseMatrix<ExactField>::identity(f, 4)));
  auto i2 = SparseMatrix<ExactField>::identity(f, 2);
  CHECK(equal(kron(i2, r), embed(r, 2, 1)));
  CHECK(equal(kron(r, i2), embed(r, 1, 2)));
  CHECK(equal(transpose(transpose(r)), r));
  auto sing = SparseMatrix<ExactField>::from_triplets(f, 2, {{0, 0, f->one()}, {1, 0, f->one()}});
  CHECK_THROWS_AS(inverse(sing), Error);
  auto m = modfield();
  CHECK_THROWS_AS(add(SparseMatrix<ModularField>::identity(m, 2), SparseMatrix<ModularField>::identity(modfield(1, 4), 2)),
                  Error);
}

TEST_CASE("block_split") {
  auto f = exfield();
  auto id = SparseMatrix<ExactField>::identity(f, 3);
  auto pi = SparseMatrix<ExactField>::diag(f, {f->one(), f->zero(), f->zero()});
  auto split = block_split<ExactField>({id}, {pi, sub(id, pi)});
  CHECK(split.dims[0][0] == 1);
  CHECK(split.dims[1][1] == 1);
  CHECK(split.residue == 0);

  auto notidem = scale(f->from_int(2), pi);
  try {
    block_split<ExactField>({id}, {notidem, sub(id, notidem)});
    FAIL("expected NotIdempotent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIdempotent);
  }
  try {
    block_split<ExactField>({id}, {pi, pi});
    FAIL("expected NotOrthogonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOrthogonal);
  }
  try {
    block_split<ExactField>({id}, {pi});
    FAIL("expected NotPartitionOfUnity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPartitionOfUnity);
  }

  // the full 2x2 matrix algebra splits into four one-dimensional corners
  auto full = subalgebra_dimension<ExactField>(
      {SparseMatrix<ExactField>::from_triplets(f, 2, {{0, 1, f->one()}}),
       SparseMatrix<ExactField>::from_triplets(f, 2, {{1, 0, f->one()}})});
  CHECK(full.dimension == 4);
  auto p0 = SparseMatrix<ExactField>::diag(f, {f->one(), f->zero()});
  auto p1 = SparseMatrix<ExactField>::diag(f, {f->zero(), f->one()});
  auto s2 = block_split<ExactField>(full.elements, {p0, p1});
  CHECK(s2.diagonal_total + s2.residue == full.dimension);
  CHECK(s2.residue == 2);
}

TEST_CASE("minimal polynomial") {
  auto f = exfield();
  auto r = hand_r_gl2(f);
  auto mp = minimal_polynomial(r);
  REQUIRE(mp.size() == 3);
  // (x - q)(x + 1/q) = x^2 - (q - 1/q) x - 1
  auto q = f->q();
  CHECK(f->eq(mp[0], f->from_int(-1)));
  CHECK(f->eq(mp[1], f->neg(f->sub(q, f->inv(q)))));
  CHECK(f->is_one(mp[2]));
  CHECK(minimal_polynomial(SparseMatrix<ExactField>::identity(f, 5)).size() == 2);
}
