#include "framiz/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace framiz {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 dd = n - 1;
  int s = 0;
  while ((dd & 1) == 0) {
    dd >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, dd, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ModularField::ModularField(u64 p, int d, u64 seed, int root_order_bound,
                           std::optional<SignedPower> a_power)
    : p_(p), d_(d), seed_(seed), root_bound_(root_order_bound) {
  if (d <= 0) throw Error(ErrorCode::UnsupportedD, "d must be positive");
  if (!is_prime_u64(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if ((p - 1) % static_cast<u64>(d) != 0)
    throw Error(ErrorCode::ModulusIncompatibleWithD,
                "p = " + std::to_string(p) + " is not 1 mod " + std::to_string(d));
  if (p == 2) throw Error(ErrorCode::ExhaustedField, "F_2 has no admissible value for q");
  if (p >= (u64{1} << 62)) throw Error(ErrorCode::NonPrimeModulus, "modulus must be below 2^62");

  u64 ninv = 1;
  for (int i = 0; i < 6; ++i) ninv *= 2 - p * ninv;
  pinv_ = 0 - ninv;
  u128 r = (static_cast<u128>(1) << 64) % p;
  r2_ = static_cast<u64>(r * r % p);
  one_ = to_mont(1);

  std::mt19937_64 rng(seed);
  if (d == 1) {
    zeta_ = one_;
  } else {
    auto factors = prime_factors(static_cast<u64>(d));
    std::uniform_int_distribution<u64> pick(2, p - 1);
    while (true) {
      Elem z = pow(from_u64(pick(rng)), static_cast<long long>((p - 1) / d));
      bool primitive = true;
      for (u64 f : factors) {
        if (is_one(pow(z, static_cast<long long>(d / f)))) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        zeta_ = z;
        break;
      }
    }
  }
  q_ = random_specialization(*this, rng, {zero()}, root_order_bound);
  if (a_power) {
    a_ = pow(q_, a_power->exponent);
    if (a_power->sign < 0) a_ = neg(a_);
  } else {
    a_ = random_specialization(*this, rng, {zero(), q_, inv(q_)}, root_order_bound);
  }
}

ModularField::Elem ModularField::from_mpz(const mpz_class& z) const {
  return from_u64(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

ModularField::Elem ModularField::from_mpq(const mpq_class& x) const {
  Elem den = from_mpz(x.get_den());
  if (is_zero(den)) throw Error(ErrorCode::BadSpecialization, "denominator vanishes mod p");
  return mul(from_mpz(x.get_num()), inv(den));
}

ModularField::Elem ModularField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero mod p");
  return pow(a, static_cast<long long>(p_ - 2));
}

ModularField::Elem ModularField::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int ModularField::root_order(Elem a, int bound) const {
  if (a == 0) return 0;
  Elem x = a;
  for (int k = 1; k <= bound; ++k) {
    if (is_one(x)) return k;
    x = mul(x, a);
  }
  return 0;
}

ModularField::Elem random_specialization(const ModularField& f, std::mt19937_64& rng,
                                         const std::vector<ModularField::Elem>& forbidden,
                                         int root_order_bound) {
  auto admissible = [&](ModularField::Elem x) {
    if (f.is_zero(x)) return false;
    for (auto y : forbidden)
      if (f.eq(x, y)) return false;
    return f.root_order(x, root_order_bound) == 0;
  };
  const u64 p = f.prime();
  if (p <= (u64{1} << 16)) {
    std::vector<ModularField::Elem> pool;
    for (u64 v = 1; v < p; ++v) {
      auto x = f.from_u64(v);
      if (admissible(x)) pool.push_back(x);
    }
    if (pool.empty())
      throw Error(ErrorCode::ExhaustedField, "no admissible residue mod " + std::to_string(p));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
  }
  std::uniform_int_distribution<u64> pick(1, p - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto x = f.from_u64(pick(rng));
    if (admissible(x)) return x;
  }
  throw Error(ErrorCode::ExhaustedField, "no admissible residue found mod " + std::to_string(p));
}

const std::vector<u64>& builtin_primes() {
  static const std::vector<u64> list = {
      4611686018426985961ull, 4611686018426819641ull, 4611686018426292961ull,
      4611686018426098921ull, 4611686018426071201ull, 4611686018425627681ull,
      4611686018425322761ull, 4611686018425073281ull, 4611686018424990121ull,
      4611686018423909041ull, 4611686018423881321ull, 4611686018423271481ull,
      4611686018423216041ull, 4611686018423105161ull, 4611686018423022001ull,
      4611686018422717081ull,
  };
  return list;
}

std::vector<u64> primes_for(int d, std::size_t count) {
  if (d <= 0) throw Error(ErrorCode::UnsupportedD, "d must be positive");
  std::vector<u64> source = builtin_primes();
  if (const char* path = std::getenv("FRAMIZ_PRIMES"); path && *path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, std::string("cannot read prime list ") + path);
    source.clear();
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      u64 v;
      if (ls >> v) {
        if (!is_prime_u64(v)) throw Error(ErrorCode::NonPrimeModulus, line);
        source.push_back(v);
      }
    }
  }
  std::vector<u64> out;
  for (u64 p : source) {
    if (out.size() == count) break;
    if ((p - 1) % static_cast<u64>(d) == 0 && p < (u64{1} << 62)) out.push_back(p);
  }
  u64 step = static_cast<u64>(d) % 2 == 0 ? d : 2 * static_cast<u64>(d);
  u64 cand = ((u64{1} << 62) - 1) / step * step + 1;
  while (out.size() < count && cand > step) {
    if (cand < (u64{1} << 62) && is_prime_u64(cand) &&
        std::find(out.begin(), out.end(), cand) == out.end())
      out.push_back(cand);
    cand -= step;
  }
  return out;
}

}  // namespace framiz
