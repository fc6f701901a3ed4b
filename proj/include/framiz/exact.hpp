#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "framiz/errors.hpp"
#include "framiz/modular.hpp"

namespace framiz {

// Element of Q(zeta_d) = Q[x]/Phi_d(x): coefficients of 1, x, ..., x^(phi-1).
using Cyc = std::vector<mpq_class>;
// Polynomial in q with Q(zeta_d) coefficients, low degree first, no trailing zeros.
using CycPoly = std::vector<Cyc>;

// num/den with den monic and gcd(num, den) = 1; zero is num = {} and den = 1.
struct RatFunc {
  CycPoly num;
  CycPoly den;
  bool operator==(const RatFunc&) const = default;
};

std::vector<mpz_class> cyclotomic_polynomial(int d);

// The field Q(zeta_d)(q).  The BMW parameter a is not an indeterminate here;
// a() is available only when a is pinned to sign*q^k.
class ExactField {
 public:
  using Elem = RatFunc;

  explicit ExactField(int d, std::optional<SignedPower> a_power = std::nullopt);

  int d() const { return d_; }
  int phi() const { return phi_; }
  const std::vector<mpz_class>& modulus() const { return cyclo_; }

  Elem zero() const;
  Elem one() const { return one_; }
  Elem from_int(long long x) const { return from_mpq(mpq_class(static_cast<long>(x))); }
  Elem from_mpq(const mpq_class& r) const;
  Elem from_cyc(const Cyc& c) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long long e) const;
  void fma(Elem& acc, const Elem& x, const Elem& y) const { acc = add(acc, mul(x, y)); }

  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_one(const Elem& a) const { return a == one_; }

  Elem zeta() const { return zeta_; }
  Elem q() const { return q_; }
  Elem a() const;
  // sign * q^k
  Elem q_power(int sign, long long k) const;

  // Re-normalizes a fraction; identity on canonical input.
  Elem normalize(Elem a) const;

  std::string str(const Elem& a) const;

  // Cyclotomic coefficient arithmetic.
  Cyc cyc_zero() const { return Cyc(phi_, mpq_class(0)); }
  Cyc cyc_one() const;
  bool cyc_is_zero(const Cyc& a) const;
  Cyc cyc_add(const Cyc& a, const Cyc& b) const;
  Cyc cyc_sub(const Cyc& a, const Cyc& b) const;
  Cyc cyc_neg(const Cyc& a) const;
  Cyc cyc_mul(const Cyc& a, const Cyc& b) const;
  Cyc cyc_inv(const Cyc& a) const;

  // Polynomial arithmetic over Q(zeta_d).
  CycPoly poly_add(const CycPoly& a, const CycPoly& b) const;
  CycPoly poly_sub(const CycPoly& a, const CycPoly& b) const;
  CycPoly poly_mul(const CycPoly& a, const CycPoly& b) const;
  CycPoly poly_scale(const CycPoly& a, const Cyc& c) const;
  void poly_divrem(const CycPoly& a, const CycPoly& b, CycPoly& quo, CycPoly& rem) const;
  CycPoly poly_gcd(CycPoly a, CycPoly b) const;  // monic, gcd(0,0) = 0

 private:
  void trim(CycPoly& p) const;
  CycPoly monic(const CycPoly& p) const;

  int d_;
  int phi_;
  std::vector<mpz_class> cyclo_;
  std::optional<SignedPower> a_power_;
  Elem one_;
  Elem zeta_;
  Elem q_;
};

// Image of an exact element at the specialization (zeta, q) of a modular field
// with the same d.  Throws BadSpecialization if the denominator vanishes.
ModularField::Elem reduce_exact(const ModularField& mf, const ExactField& ef, const RatFunc& x);

}  // namespace framiz
