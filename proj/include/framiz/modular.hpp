#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "framiz/errors.hpp"

namespace framiz {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime_u64(u64 n);
u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);

// sign * q^exponent, used to pin the BMW parameter a.
struct SignedPower {
  int sign = 1;
  int exponent = 0;
  bool operator==(const SignedPower&) const = default;
};

// Prime field F_p, p < 2^62, elements held in Montgomery form.
class ModularField {
 public:
  using Elem = u64;

  // Builds F_p together with zeta of order d and specialized q, a.
  // q and a avoid 0 and all roots of unity of order <= root_order_bound.
  ModularField(u64 p, int d, u64 seed, int root_order_bound = 32,
               std::optional<SignedPower> a_power = std::nullopt);

  u64 prime() const { return p_; }
  int d() const { return d_; }
  u64 seed() const { return seed_; }
  int root_order_bound() const { return root_bound_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem from_u64(u64 x) const { return to_mont(x % p_); }
  Elem from_int(long long x) const {
    if (x >= 0) return from_u64(static_cast<u64>(x));
    return neg(from_u64(static_cast<u64>(-(x + 1)) + 1));
  }
  Elem from_mpz(const mpz_class& z) const;
  Elem from_mpq(const mpq_class& r) const;
  u64 value(Elem a) const { return redc(a); }

  Elem add(Elem a, Elem b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return redc(static_cast<u128>(a) * b); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  // acc += x*y
  void fma(Elem& acc, Elem x, Elem y) const { acc = add(acc, mul(x, y)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_one(Elem a) const { return a == one_; }

  Elem zeta() const { return zeta_; }
  Elem q() const { return q_; }
  Elem a() const { return a_; }

  // Smallest k in 1..bound with a^k = 1, or 0 if none.
  int root_order(Elem a, int bound) const;

  std::string str(Elem a) const { return std::to_string(value(a)); }

 private:
  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * pinv_;
    u128 s = t + static_cast<u128>(m) * p_;
    u64 r = static_cast<u64>(s >> 64);
    return r >= p_ ? r - p_ : r;
  }
  u64 to_mont(u64 x) const { return redc(static_cast<u128>(x) * r2_); }

  u64 p_;
  int d_;
  u64 seed_;
  int root_bound_;
  u64 pinv_;
  u64 r2_;
  u64 one_;
  Elem zeta_;
  Elem q_;
  Elem a_;

  friend Elem random_specialization(const ModularField&, std::mt19937_64&, const std::vector<Elem>&, int);
};

// Uniform nonzero residue avoiding `forbidden` and every root of unity of
// order <= root_order_bound.  Throws ExhaustedField if no residue qualifies.
ModularField::Elem random_specialization(const ModularField& f, std::mt19937_64& rng,
                                         const std::vector<ModularField::Elem>& forbidden,
                                         int root_order_bound);

// Default list of 62-bit primes, all congruent to 1 mod 27720.
const std::vector<u64>& builtin_primes();

// Primes usable for a given d: the active list (FRAMIZ_PRIMES names a file of
// primes, one per line, replacing the builtin list) filtered by p = 1 mod d,
// topped up by a deterministic downward search below 2^62 when short.
std::vector<u64> primes_for(int d, std::size_t count);

}  // namespace framiz
