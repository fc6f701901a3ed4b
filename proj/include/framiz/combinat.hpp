#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace framiz {

// nu = (nu_1, ..., nu_d), nonnegative, summing to n.
using Composition = std::vector<int>;

// Compositions of n into exactly d parts, in decreasing lexicographic order
// ((2,0), (1,1), (0,2) for n = d = 2).
std::vector<Composition> enumerate_compositions(int n, int d);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);
mpz_class multinomial(const Composition& nu);

// Ordered partition (I_1, ..., I_d) of {1..n}, stored as the position of each
// point: label[j] = pos_{j+1}(I) - 1.
struct OrderedPartition {
  int d = 1;
  std::vector<int> label;

  int n() const { return static_cast<int>(label.size()); }
  int pos(int j) const { return label.at(j - 1) + 1; }  // 1-based point and block
  std::vector<std::vector<int>> parts() const;           // 1-based points per block
  Composition sizes() const;
  bool operator==(const OrderedPartition&) const = default;
  bool operator<(const OrderedPartition& o) const { return label < o.label; }
};

OrderedPartition ordered_partition_from_parts(int n, const std::vector<std::vector<int>>& parts);

// All d^n ordered partitions; label sequences in lexicographic order.
std::vector<OrderedPartition> enumerate_ordered_partitions(int n, int d);

// Canonical representative of the S_d orbit: blocks sorted by minimum element
// with empty blocks last, i.e. labels relabelled in order of first appearance.
struct OrbitClass {
  int d = 1;
  std::vector<int> label;
  bool operator==(const OrbitClass&) const = default;
  bool operator<(const OrbitClass& o) const { return label < o.label; }
};

OrbitClass orbit_of(const OrderedPartition& I);

// w acts by (w.I)_{w(a)} = I_a; w is a permutation of {0..d-1}.
OrderedPartition act(const std::vector<int>& w, const OrderedPartition& I);

// lambda with parts in decreasing order (no zeros) and multiplicities
// mult[i] = number of parts equal to i, for i = 0..n.
struct PartitionWithMult {
  std::vector<int> parts;
  std::vector<int> mult;
  int length() const { return static_cast<int>(parts.size()); }
};

std::vector<PartitionWithMult> enumerate_partitions(int n, int max_length);

using FactorDims = std::function<mpz_class(int)>;

// Number of orbits of P_d(n) under S_d.
mpz_class bounded_bell(int n, int d);

// sum over nu |=_d n of C(n,nu)^2 prod_b f(nu_b)
mpz_class dim_block_sum(int n, int d, const FactorDims& f);
// Same with a separate factor function for each block.
mpz_class dim_block_sum(int n, const std::vector<FactorDims>& per_block);
// sum over lambda |- n with at most d parts of C(n,lambda)^2 prod f(lambda_i) / prod l_i!
mpz_class dim_fixedpoint_sum(int n, int d, const FactorDims& f);

mpz_class dim_yh(int n, int d);          // n! d^n
mpz_class dim_tl(int k);                 // Catalan number
mpz_class dim_bmw(int k);                // (2k)! / (2^k k!)
mpz_class dim_cyc(int n, int d, int m);  // (dm)^n n!
mpz_class g_circulant_dim(const std::vector<int>& group_orders, const mpz_class& inner);
// dim of the image of the Hecke algebra on (C^N)^{(x) k}: sum of (f^lambda)^2, l(lambda) <= N
mpz_class hecke_image_dim(int k, int N);
mpz_class standard_tableaux(const std::vector<int>& lambda);

std::string to_string(const Composition& nu);

}  // namespace framiz
