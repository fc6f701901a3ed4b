#include <numeric>

#include "doctest.h"
#include "framiz/echelon.hpp"
#include "framiz/framed.hpp"
#include "../common/oracles.hpp"

using namespace framiz;

namespace {

ModularHandle modfield(int d, u64 seed = 3) {
  return std::get<ModularHandle>(make_field({Backend::Modular, d, false, std::nullopt, primes_for(d, 1)[0], seed}));
}
ExactHandle exfield(int d) { return std::get<ExactHandle>(make_field({Backend::Exact, d})); }

std::vector<BlockKind> kinds(const std::vector<std::string>& names) {
  std::vector<BlockKind> out;
  for (const auto& s : names) out.push_back(parse_block_kind(s));
  return out;
}

template <class F>
using M = SparseMatrix<F>;

template <class F>
M<F> I(const FramedSetup<F>& s) {
  return M<F>::identity(s.field, s.ambient());
}

template <class F>
std::size_t trace_rank_diag(const M<F>& m) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (!m.field().is_zero(m.at(i, i))) ++r;
  return r;
}

using oracle::algebra_on_tensor;

}  // namespace

TEST_CASE("tau") {
  auto f1 = exfield(1);
  auto s1 = make_setup(f1, kinds({"GL2"}), 2);
  CHECK(equal(tau(s1, 1), I(s1)));
  auto f2 = exfield(2);
  auto s2 = make_setup(f2, kinds({"GL1", "GL1"}), 1);
  CHECK(equal(tau(s2, 1), M<ExactField>::diag(f2, {f2->one(), f2->from_int(-1)})));
  CHECK_THROWS_AS(tau(s2, 2), Error);
  for (int d : {2, 3, 4}) {
    auto m = modfield(d);
    std::vector<std::string> names(d, "GL2");
    names[0] = "GL1";
    auto s = make_setup(m, kinds(names), 2);
    for (int i = 1; i <= 2; ++i) CHECK(equal(power(tau(s, i), d), I(s)));
  }
}

TEST_CASE("sigma") {
  auto f = exfield(2);
  auto s = make_setup(f, kinds({"GL1", "GL1"}), 2);
  auto q = f->q();
  auto expect = M<ExactField>::from_triplets(f, 4, {{0, 0, q}, {1, 2, f->one()}, {2, 1, f->one()}, {3, 3, q}});
  CHECK(equal(sigma(s, 1), expect));
  CHECK(equal(mul(sigma(s, 1), sigma_inv(s, 1)), I(s)));

  auto f1 = exfield(1);
  auto s1 = make_setup(f1, kinds({"GL2"}), 3);
  CHECK(equal(sigma(s1, 2), leg_operator(r_gl(2, f1).R, 2, 3, 2)));

  auto m = modfield(2);
  for (auto names : std::vector<std::vector<std::string>>{{"GL2", "GL2"}, {"GL1", "GL2"}, {"SO4", "SO4"}}) {
    auto sm = make_setup(m, kinds(names), 3);
    auto a = sigma(sm, 1), b = sigma(sm, 2);
    CHECK(equal(mul(mul(a, b), a), mul(mul(b, a), b)));
  }
  CHECK_THROWS_AS(sigma(s, 2), Error);
}

TEST_CASE("epsilon") {
  auto f = exfield(2);
  auto s = make_setup(f, kinds({"GL1", "GL1"}), 2);
  CHECK(equal(epsilon(s, 1, 2), M<ExactField>::diag(f, {f->one(), f->zero(), f->zero(), f->one()})));
  CHECK(equal(epsilon(s, 2, 1), epsilon(s, 1, 2)));
  CHECK_THROWS_AS(epsilon(s, 1, 1), Error);
  CHECK_THROWS_AS(epsilon(s, 1, 3), Error);
  auto f1 = exfield(1);
  auto s1 = make_setup(f1, kinds({"GL2"}), 3);
  CHECK(equal(epsilon(s1, 1, 3), I(s1)));

  // E_{i,j} = (1/d) sum_a t_i^a t_j^-a
  for (int d : {2, 3}) {
    auto fe = exfield(d);
    std::vector<std::string> names(d, "GL1");
    names.back() = "GL2";
    auto se = make_setup(fe, kinds(names), 3);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {3, 2}}) {
      M<ExactField> acc(fe, se.ambient());
      auto ti = tau(se, i), tj_inv = inverse(tau(se, j));
      for (int a = 1; a <= d; ++a) acc = add(acc, mul(power(ti, a), power(tj_inv, a)));
      CHECK(equal(scale(fe->inv(fe->from_int(d)), acc), epsilon(se, i, j)));
    }
  }
}

TEST_CASE("E_I and pi_nu projectors") {
  auto m = modfield(2);
  auto s = make_setup(m, kinds({"GL2", "GL1"}), 3);
  auto parts = enumerate_ordered_partitions(3, 2);
  M<ModularField> total(m, s.ambient());
  std::vector<M<ModularField>> ps;
  for (const auto& P : parts) ps.push_back(proj_EI(s, P));
  for (std::size_t a = 0; a < ps.size(); ++a) {
    total = add(total, ps[a]);
    for (std::size_t b = 0; b < ps.size(); ++b)
      if (a != b) CHECK(mul(ps[a], ps[b]).is_zero());
  }
  CHECK(equal(total, I(s)));

  auto s1 = make_setup(modfield(2), kinds({"GL2", "GL2"}), 1);
  auto e0 = proj_EI(s1, enumerate_ordered_partitions(1, 2)[0]);
  CHECK(trace_rank_diag(e0) == 2);
  CHECK(!s1.field->is_zero(e0.at(0, 0)));
  CHECK(s1.field->is_zero(e0.at(2, 2)));

  M<ModularField> tnu(m, s.ambient());
  auto comps = enumerate_compositions(3, 2);
  for (const auto& nu : comps) {
    auto p = proj_nu(s, nu);
    tnu = add(tnu, p);
    // rank = C(n,nu) * prod dim(V_b)^{nu_b}
    mpz_class expect = multinomial(nu);
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < nu[b]; ++k) expect *= static_cast<unsigned long>(s.block_dim[b]);
    CHECK(mpz_class(trace_rank_diag(p)) == expect);
    for (const auto& mu : comps)
      if (mu != nu) CHECK(mul(p, proj_nu(s, mu)).is_zero());
  }
  CHECK(equal(tnu, I(s)));
  CHECK_THROWS_AS(proj_nu(s, {1, 1}), Error);
  CHECK_THROWS_AS(proj_EI(s, enumerate_ordered_partitions(2, 2)[0]), Error);
}

TEST_CASE("S_d permutation action") {
  auto m = modfield(3);
  auto s = make_setup(m, kinds({"GL2", "GL2", "GL2"}), 2);
  std::vector<int> w{1, 2, 3};
  std::vector<std::vector<int>> perms;
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  CHECK(equal(sd_perm(s, {1, 2, 3}), I(s)));
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::vector<int> ab(3);
      for (int x = 0; x < 3; ++x) ab[x] = a[b[x] - 1];
      CHECK(equal(mul(sd_perm(s, a), sd_perm(s, b)), sd_perm(s, ab)));
    }
  for (const auto& a : perms) {
    auto p = sd_perm(s, a), pi = transpose(p);
    std::vector<int> a0(3);
    for (int x = 0; x < 3; ++x) a0[x] = a[x] - 1;
    for (const auto& P : enumerate_ordered_partitions(2, 3)) CHECK(equal(mul(mul(p, proj_EI(s, P)), pi), proj_EI(s, act(a0, P))));
    CHECK(equal(mul(p, sigma(s, 1)), mul(sigma(s, 1), p)));
    CHECK(equal(mul(p, epsilon(s, 1, 2)), mul(epsilon(s, 1, 2), p)));
  }
  auto het = make_setup(modfield(2), kinds({"GL2", "GL1"}), 2);
  try {
    sd_perm(het, {2, 1});
    FAIL("expected HeterogeneousBlocks");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HeterogeneousBlocks);
  }
  CHECK_THROWS_AS(sd_perm(s, {1, 1, 2}), Error);
}

TEST_CASE("sigma_0") {
  auto m = modfield(2);
  auto trivial = make_setup(m, kinds({"GL2", "GL2"}), 2, std::vector<BoundaryRep>(2, parse_boundary("Sym0")));
  CHECK(equal(sigma0(trivial), I(trivial)));

  auto m1 = modfield(1);
  auto s1 = make_setup(m1, kinds({"GL2"}), 2, std::vector<BoundaryRep>{BoundaryRep{}});
  auto r = r_gl(2, m1).R;
  CHECK(equal(sigma0(s1), embed(mul(r, r), 1, 2)));

  for (auto b : {"V", "Sym2"}) {
    auto s = make_setup(m, kinds({"GL2", "GL2"}), 2, std::vector<BoundaryRep>(2, parse_boundary(b)));
    auto s0 = sigma0(s), sg = sigma(s, 1);
    CHECK(equal(mul(mul(s0, sg), mul(s0, sg)), mul(mul(sg, s0), mul(sg, s0))));
    CHECK(equal(mul(s0, sigma0(s, true)), I(s)));
    for (int i = 1; i <= 2; ++i) CHECK(equal(mul(s0, tau(s, i)), mul(tau(s, i), s0)));
    auto w = sd_perm(s, {2, 1});
    CHECK(equal(mul(w, s0), mul(s0, w)));
  }
  auto s3 = make_setup(m, kinds({"GL2", "GL2"}), 3, std::vector<BoundaryRep>(2, BoundaryRep{}));
  CHECK(equal(mul(sigma0(s3), sigma(s3, 2)), mul(sigma(s3, 2), sigma0(s3))));

  auto nb = make_setup(m, kinds({"GL2", "GL2"}), 2);
  try {
    sigma0(nb);
    FAIL("expected NoBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBoundary);
  }
  CHECK_THROWS_AS(make_setup(m, kinds({"GL2", "GL2"}), 2, std::vector<BoundaryRep>{BoundaryRep{}, parse_boundary("Sym2")}),
                  Error);
}

TEST_CASE("framed braid relations and characteristic equations") {
  auto m = modfield(2);
  for (auto names : std::vector<std::vector<std::string>>{{"GL2", "GL1"}, {"SO4", "SO4"}, {"SP2", "GL2"}}) {
    auto s = make_setup(m, kinds(names), 3);
    auto one = I(s);
    for (int i = 1; i <= 3; ++i) {
      CHECK(equal(power(tau(s, i), 2), one));
      for (int j = 1; j <= 3; ++j) CHECK(equal(mul(tau(s, i), tau(s, j)), mul(tau(s, j), tau(s, i))));
    }
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 3; ++j) {
        int sj = j == i ? i + 1 : j == i + 1 ? i : j;
        CHECK(equal(mul(tau(s, j), sigma(s, i)), mul(sigma(s, i), tau(s, sj))));
      }
    for (int i = 1; i <= 2; ++i) {
      auto sg = sigma(s, i), ep = epsilon(s, i, i + 1);
      // eps_i prod (sigma_i - lambda) = 0 over the union of block eigenvalues
      std::vector<ModularField::Elem> lam;
      for (const auto& p : s.packs)
        for (auto x : p.eigenvalues)
          if (std::find(lam.begin(), lam.end(), x) == lam.end()) lam.push_back(x);
      CHECK(mul(ep, detail::poly_of_roots(sg, lam)).is_zero());
      CHECK(mul(sub(one, ep), sub(mul(sg, sg), one)).is_zero());
    }
  }
}

TEST_CASE("framed operators lie in the centralizer") {
  auto m = modfield(2);
  for (auto names : std::vector<std::vector<std::string>>{{"GL2", "GL2"}, {"GL2", "GL3"}}) {
    auto s = make_setup(m, kinds(names), 2);
    auto act = algebra_on_tensor(s);
    std::vector<M<ModularField>> ops{tau(s, 1), tau(s, 2), sigma(s, 1), epsilon(s, 1, 2), e_op(s, 1)};
    for (const auto& o : ops)
      for (const auto& x : act) CHECK(equal(mul(o, x), mul(x, o)));
  }
}

TEST_CASE("generator assignments") {
  auto m1 = modfield(1);
  auto s1 = make_setup(m1, kinds({"GL2"}), 3);
  auto fr = assignment_for(s1, Preset::Framed);
  CHECK(equal(fr.get("s2"), leg_operator(r_gl(2, m1).R, 2, 3, 2)));
  CHECK(equal(fr.get("t1"), I(s1)));

  auto m = modfield(2);
  auto s = make_setup(m, kinds({"GL2", "GL2"}), 2);
  auto tied = assignment_for(s, Preset::Tied);
  CHECK(tied.generating_symbols() == std::vector<std::string>{"s1", "s1^-1", "E1"});
  CHECK_FALSE(tied.has("t1"));
  CHECK(equal(tied.get("E1"), epsilon(s, 1, 2)));
  CHECK(equal(tied.get("E2,1"), epsilon(s, 1, 2)));
  auto q = m->q();
  auto qd = m->sub(q, m->inv(q));
  CHECK(equal(tied.get("e1"), sub(epsilon(s, 1, 2), scale(m->inv(qd), sub(sigma(s, 1), sigma_inv(s, 1))))));
  CHECK_THROWS_AS(tied.get("x1"), Error);
  CHECK_THROWS_AS(tied.get("s0"), Error);

  try {
    assignment_for(s, Preset::Affine);
    FAIL("expected NoBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoBoundary);
  }
  auto sb = make_setup(m, kinds({"GL2", "GL2"}), 2, std::vector<BoundaryRep>(2, BoundaryRep{}));
  auto af = assignment_for(sb, Preset::Affine);
  CHECK(af.generating_symbols().back() == "s0");
  CHECK(equal(af.get("s0^-1"), sigma0(sb, true)));
  CHECK_THROWS_AS(assignment_for(make_setup(m, kinds({"GL2", "GL1"}), 2), Preset::Tied), Error);
}
