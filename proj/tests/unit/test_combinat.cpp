#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "framiz/combinat.hpp"
#include "framiz/errors.hpp"

using namespace framiz;

namespace {

// Stirling numbers of the second kind by the usual recurrence.
long stirling2(int n, int k) {
  std::vector<std::vector<long>> s(n + 1, std::vector<long>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return k <= n ? s[n][k] : 0;
}

long bell_oracle(int n, int d) {
  long t = 0;
  for (int k = 0; k <= std::min(n, d); ++k) t += stirling2(n, k);
  return t;
}

// Set partitions of {0..n-1} into at most d nonempty blocks, by brute force
// over all maps to {0..d-1} modulo relabelling via sorted block sets.
std::size_t count_set_partitions(int n, int d) {
  std::set<std::set<std::set<int>>> seen;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  for (long code = 0; code < total; ++code) {
    std::vector<std::set<int>> blocks(d);
    long c = code;
    for (int i = 0; i < n; ++i) {
      blocks[c % d].insert(i);
      c /= d;
    }
    std::set<std::set<int>> p;
    for (auto& b : blocks)
      if (!b.empty()) p.insert(b);
    seen.insert(p);
  }
  return seen.size();
}

mpz_class catalan_oracle(int k) {
  std::vector<mpz_class> c(k + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[k];
}

mpz_class double_factorial_odd(int k) {
  mpz_class r = 1;
  for (int m = 2 * k - 1; m > 1; m -= 2) r *= m;
  return r;
}

const FactorDims hecke = [](int k) { return factorial(k); };
const FactorDims tl = [](int k) { return dim_tl(k); };
const FactorDims bmw = [](int k) { return dim_bmw(k); };

}  // namespace

TEST_CASE("compositions") {
  CHECK(enumerate_compositions(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(enumerate_compositions(0, 3) == std::vector<Composition>{{0, 0, 0}});
  CHECK(enumerate_compositions(3, 2).size() == 4);
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d) {
      auto cs = enumerate_compositions(n, d);
      CHECK(mpz_class(cs.size()) == binomial(n + d - 1, d - 1));
      CHECK(std::is_sorted(cs.rbegin(), cs.rend()));
      mpz_class sum = 0;
      for (const auto& c : cs) {
        CHECK(c.size() == static_cast<std::size_t>(d));
        CHECK(std::accumulate(c.begin(), c.end(), 0) == n);
        sum += multinomial(c);
      }
      mpz_class dn;
      mpz_ui_pow_ui(dn.get_mpz_t(), d, n);
      CHECK(sum == dn);
    }
  CHECK_THROWS_AS(enumerate_compositions(-1, 2), Error);
}

TEST_CASE("multinomial") {
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({5}) == 1);
  CHECK(multinomial({1, 1, 1}) == 6);
  CHECK(multinomial({}) == 1);
}

TEST_CASE("ordered partitions") {
  auto p1 = enumerate_ordered_partitions(1, 2);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0].parts() == std::vector<std::vector<int>>{{1}, {}});
  CHECK(p1[1].parts() == std::vector<std::vector<int>>{{}, {1}});
  CHECK(enumerate_ordered_partitions(2, 2).size() == 4);
  auto p0 = enumerate_ordered_partitions(0, 5);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].parts() == std::vector<std::vector<int>>(5));

  for (const auto& I : enumerate_ordered_partitions(4, 3)) {
    auto parts = I.parts();
    CHECK(ordered_partition_from_parts(4, parts) == I);
    for (int j = 1; j <= 4; ++j) {
      const auto& blk = parts[I.pos(j) - 1];
      CHECK(std::find(blk.begin(), blk.end(), j) != blk.end());
    }
  }
  CHECK_THROWS_AS(ordered_partition_from_parts(2, {{1}, {1}}), Error);
  CHECK_THROWS_AS(ordered_partition_from_parts(2, {{1}, {}}), Error);
}

TEST_CASE("orbits and bounded Bell numbers") {
  CHECK(bounded_bell(3, 2) == 4);
  CHECK(bounded_bell(3, 3) == 5);
  for (int d = 1; d <= 4; ++d) CHECK(bounded_bell(0, d) == 1);

  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d) {
      std::set<OrbitClass> orbits;
      for (const auto& I : enumerate_ordered_partitions(n, d)) orbits.insert(orbit_of(I));
      CHECK(mpz_class(orbits.size()) == bounded_bell(n, d));
      CHECK(bounded_bell(n, d) == bell_oracle(n, d));
      if (n <= 5) CHECK(count_set_partitions(n, d) == orbits.size());
    }

  // orbit_of is constant exactly on S_d orbits
  int n = 4, d = 3;
  std::vector<int> w(d);
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  auto all = enumerate_ordered_partitions(n, d);
  for (const auto& I : all) {
    std::set<OrderedPartition> orbit;
    for (const auto& p : perms) {
      orbit.insert(act(p, I));
      CHECK(orbit_of(act(p, I)) == orbit_of(I));
    }
    for (const auto& J : all) CHECK((orbit_of(J) == orbit_of(I)) == (orbit.count(J) == 1));
  }
}

TEST_CASE("orbit representative sorts blocks by minimum") {
  auto I = ordered_partition_from_parts(4, {{}, {2, 4}, {1, 3}});
  auto c = orbit_of(I);
  CHECK(c.label == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("partitions with multiplicities") {
  auto ps = enumerate_partitions(4, 4);
  CHECK(ps.size() == 5);
  for (const auto& p : ps) {
    int s = 0;
    for (std::size_t i = 0; i < p.mult.size(); ++i) s += static_cast<int>(i) * p.mult[i];
    CHECK(s == 4);
    CHECK(std::accumulate(p.mult.begin(), p.mult.end(), 0) == p.length());
    CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
  }
  CHECK(enumerate_partitions(4, 2).size() == 3);
  CHECK(enumerate_partitions(0, 3).size() == 1);
}

TEST_CASE("block sum dimensions") {
  CHECK(dim_block_sum(2, 2, hecke) == 8);
  CHECK(dim_block_sum(3, 2, tl) == 46);
  CHECK(dim_block_sum(2, 2, bmw) == 10);
  std::vector<long> bmw_seq{1, 2, 10, 84, 1014, 16140};
  for (int n = 0; n < 6; ++n) CHECK(dim_block_sum(n, 2, bmw) == bmw_seq[n]);
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) CHECK(dim_block_sum(n, d, hecke) == dim_yh(n, d));

  // with unit factors the sum is sum of squared multinomials
  for (int n = 0; n <= 5; ++n) {
    mpz_class sq = 0;
    for (const auto& c : enumerate_compositions(n, 3)) sq += multinomial(c) * multinomial(c);
    CHECK(dim_block_sum(n, 3, [](int) { return mpz_class(1); }) == sq);
  }
  std::vector<FactorDims> mixed{tl, hecke};
  CHECK(dim_block_sum(3, mixed) == 5 + 9 * 2 + 9 * 2 + 6);
}

TEST_CASE("fixed point dimensions") {
  CHECK(dim_fixedpoint_sum(3, 3, hecke) == 30);
  CHECK(dim_fixedpoint_sum(3, 3, tl) == 29);
  CHECK(dim_fixedpoint_sum(3, 3, bmw) == 48);
  CHECK(dim_fixedpoint_sum(2, 2, bmw) == 5);
  std::vector<long> hec{1, 1, 4, 30, 360}, tls{1, 1, 4, 29, 334, 5512}, bm{1, 1, 5, 48, 747};
  for (int n = 0; n < 5; ++n) CHECK(dim_fixedpoint_sum(n, n ? n : 1, hecke) == hec[n]);
  for (int n = 0; n < 6; ++n) CHECK(dim_fixedpoint_sum(n, n ? n : 1, tl) == tls[n]);
  for (int n = 0; n < 5; ++n) CHECK(dim_fixedpoint_sum(n, n ? n : 1, bmw) == bm[n]);
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) CHECK(dim_fixedpoint_sum(n, d, hecke) == factorial(n) * bell_oracle(n, d));
  CHECK_THROWS_AS(dim_fixedpoint_sum(2, 0, hecke), Error);
}

TEST_CASE("closed forms") {
  CHECK(dim_yh(2, 2) == 8);
  CHECK(dim_yh(3, 2) == 48);
  CHECK(dim_bmw(3) == 15);
  CHECK(dim_cyc(2, 2, 2) == 32);
  for (int k = 0; k <= 12; ++k) {
    CHECK(dim_tl(k) == catalan_oracle(k));
    CHECK(dim_bmw(k) == double_factorial_odd(k));
    CHECK(hecke_image_dim(k, 2) == dim_tl(k));
    CHECK(hecke_image_dim(k, k ? k : 1) == factorial(k));
  }
  CHECK(standard_tableaux({2, 1}) == 2);
  CHECK(standard_tableaux({3, 2, 1}) == 16);
  CHECK(g_circulant_dim({2}, 1) == 2);
  CHECK(g_circulant_dim({2, 1}, 4) == 8);
  CHECK(g_circulant_dim({}, 7) == 7);
  CHECK_THROWS_AS(g_circulant_dim({0}, 1), Error);
}
