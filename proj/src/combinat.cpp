#include "framiz/combinat.hpp"

#include <algorithm>

#include "framiz/errors.hpp"

namespace framiz {

namespace {

void compositions_rec(int left, int d, Composition& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur.push_back(k);
    compositions_rec(left - k, d, cur, out);
    cur.pop_back();
  }
}

void partitions_rec(int left, int max_part, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int k = std::min(left, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(left - k, k, max_len, cur, out);
    cur.pop_back();
  }
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw Error(ErrorCode::BadPartition, "non-integral dimension term");
  return q;
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int d) {
  if (n < 0 || d < 1) throw Error(ErrorCode::BadComposition, "need n >= 0 and d >= 1");
  std::vector<Composition> out;
  Composition cur;
  compositions_rec(n, d, cur, out);
  return out;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class multinomial(const Composition& nu) {
  int n = 0;
  mpz_class den = 1;
  for (int x : nu) {
    if (x < 0) throw Error(ErrorCode::BadComposition, "negative part");
    n += x;
    den *= factorial(x);
  }
  return factorial(n) / den;
}

std::vector<std::vector<int>> OrderedPartition::parts() const {
  std::vector<std::vector<int>> p(d);
  for (int j = 0; j < n(); ++j) p[label[j]].push_back(j + 1);
  return p;
}

Composition OrderedPartition::sizes() const {
  Composition c(d, 0);
  for (int l : label) ++c[l];
  return c;
}

OrderedPartition ordered_partition_from_parts(int n, const std::vector<std::vector<int>>& parts) {
  OrderedPartition I;
  I.d = static_cast<int>(parts.size());
  I.label.assign(n, -1);
  for (int a = 0; a < I.d; ++a)
    for (int j : parts[a]) {
      if (j < 1 || j > n || I.label[j - 1] != -1) throw Error(ErrorCode::BadPartition, "parts must be disjoint subsets of 1..n");
      I.label[j - 1] = a;
    }
  for (int l : I.label)
    if (l < 0) throw Error(ErrorCode::BadPartition, "parts do not cover 1..n");
  return I;
}

std::vector<OrderedPartition> enumerate_ordered_partitions(int n, int d) {
  if (n < 0 || d < 1) throw Error(ErrorCode::BadPartition, "need n >= 0 and d >= 1");
  std::vector<OrderedPartition> out;
  OrderedPartition I{d, std::vector<int>(n, 0)};
  while (true) {
    out.push_back(I);
    int j = n - 1;
    while (j >= 0 && I.label[j] == d - 1) {
      I.label[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++I.label[j];
  }
  return out;
}

OrbitClass orbit_of(const OrderedPartition& I) {
  std::vector<int> relabel(I.d, -1);
  int next = 0;
  OrbitClass c{I.d, std::vector<int>(I.n())};
  for (int j = 0; j < I.n(); ++j) {
    int& r = relabel[I.label[j]];
    if (r < 0) r = next++;
    c.label[j] = r;
  }
  return c;
}

OrderedPartition act(const std::vector<int>& w, const OrderedPartition& I) {
  if (static_cast<int>(w.size()) != I.d) throw Error(ErrorCode::BadPartition, "permutation size differs from d");
  OrderedPartition J = I;
  for (auto& l : J.label) l = w[l];
  return J;
}

std::vector<PartitionWithMult> enumerate_partitions(int n, int max_length) {
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  partitions_rec(n, n, max_length, cur, raw);
  std::vector<PartitionWithMult> out;
  for (auto& p : raw) {
    PartitionWithMult pm;
    pm.parts = p;
    pm.mult.assign(n + 1, 0);
    for (int x : p) ++pm.mult[x];
    out.push_back(std::move(pm));
  }
  return out;
}

mpz_class bounded_bell(int n, int d) {
  mpz_class total = 0;
  for (const auto& lam : enumerate_partitions(n, d)) {
    mpz_class den = 1;
    for (int l : lam.mult) den *= factorial(l);
    total += exact_div(multinomial(lam.parts), den);
  }
  return total;
}

mpz_class dim_block_sum(int n, int d, const FactorDims& f) {
  return dim_block_sum(n, std::vector<FactorDims>(d, f));
}

mpz_class dim_block_sum(int n, const std::vector<FactorDims>& per_block) {
  mpz_class total = 0;
  for (const auto& nu : enumerate_compositions(n, static_cast<int>(per_block.size()))) {
    mpz_class c = multinomial(nu);
    mpz_class term = c * c;
    for (std::size_t b = 0; b < nu.size(); ++b) term *= per_block[b](nu[b]);
    total += term;
  }
  return total;
}

mpz_class dim_fixedpoint_sum(int n, int d, const FactorDims& f) {
  if (d < 1) throw Error(ErrorCode::BadPartition, "d must be positive");
  mpz_class total = 0;
  for (const auto& lam : enumerate_partitions(n, d)) {
    mpz_class c = multinomial(lam.parts);
    mpz_class num = c * c, den = 1;
    for (int x : lam.parts) num *= f(x);
    for (int l : lam.mult) den *= factorial(l);
    total += exact_div(num, den);
  }
  return total;
}

mpz_class dim_yh(int n, int d) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
  return factorial(n) * p;
}

mpz_class dim_tl(int k) { return binomial(2 * k, k) / (k + 1); }

mpz_class dim_bmw(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return factorial(2 * k) / (p * factorial(k));
}

mpz_class dim_cyc(int n, int d, int m) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d * m), static_cast<unsigned long>(n));
  return p * factorial(n);
}

mpz_class g_circulant_dim(const std::vector<int>& group_orders, const mpz_class& inner) {
  mpz_class r = inner;
  for (int g : group_orders) {
    if (g < 1) throw Error(ErrorCode::BadPartition, "group orders must be positive");
    r *= g;
  }
  return r;
}

mpz_class standard_tableaux(const std::vector<int>& lambda) {
  int n = 0;
  for (int x : lambda) n += x;
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  return factorial(n) / hooks;
}

mpz_class hecke_image_dim(int k, int N) {
  mpz_class total = 0;
  for (const auto& lam : enumerate_partitions(k, N)) {
    mpz_class f = standard_tableaux(lam.parts);
    total += f * f;
  }
  return total;
}

std::string to_string(const Composition& nu) {
  std::string s = "(";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nu[i]);
  }
  return s + ")";
}

}  // namespace framiz
