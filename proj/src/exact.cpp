#include "framiz/exact.hpp"

#include <sstream>

namespace framiz {

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void qdivrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  qtrim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, mpq_class(0));
  const mpq_class& lb = b.back();
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    if (rem[i] == 0) continue;
    mpq_class c = rem[i] / lb;
    std::size_t shift = i - (b.size() - 1);
    quo[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  qtrim(rem);
  qtrim(quo);
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

bool is_monomial(const CycPoly& p, const ExactField& f) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!f.cyc_is_zero(p[i])) return false;
  return true;
}

std::size_t valuation(const CycPoly& p, const ExactField& f) {
  std::size_t v = 0;
  while (v < p.size() && f.cyc_is_zero(p[v])) ++v;
  return v;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int d) {
  if (d <= 0) throw Error(ErrorCode::UnsupportedD, "d must be positive");
  std::vector<mpz_class> p(d + 1, mpz_class(0));
  p[0] = -1;
  p[d] = 1;
  for (int k = 1; k < d; ++k) {
    if (d % k) continue;
    auto f = cyclotomic_polynomial(k);
    std::vector<mpz_class> quo(p.size() - f.size() + 1, mpz_class(0));
    for (std::size_t i = p.size(); i-- >= f.size();) {
      mpz_class c = p[i];
      if (c == 0) continue;
      std::size_t shift = i - (f.size() - 1);
      quo[shift] = c;
      for (std::size_t j = 0; j < f.size(); ++j) p[shift + j] -= c * f[j];
    }
    p = quo;
  }
  return p;
}

ExactField::ExactField(int d, std::optional<SignedPower> a_power) : d_(d), a_power_(a_power) {
  if (d <= 0) throw Error(ErrorCode::UnsupportedD, "d must be positive");
  cyclo_ = cyclotomic_polynomial(d);
  phi_ = static_cast<int>(cyclo_.size()) - 1;
  one_ = from_mpq(mpq_class(1));
  Cyc z = cyc_zero();
  if (phi_ == 1) {
    z[0] = mpq_class(-cyclo_[0]);
  } else {
    z[1] = 1;
  }
  zeta_ = from_cyc(z);
  q_ = q_power(1, 1);
}

Cyc ExactField::cyc_one() const {
  Cyc c = cyc_zero();
  c[0] = 1;
  return c;
}

bool ExactField::cyc_is_zero(const Cyc& a) const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Cyc ExactField::cyc_add(const Cyc& a, const Cyc& b) const {
  Cyc r(phi_);
  for (int i = 0; i < phi_; ++i) r[i] = a[i] + b[i];
  return r;
}

Cyc ExactField::cyc_sub(const Cyc& a, const Cyc& b) const {
  Cyc r(phi_);
  for (int i = 0; i < phi_; ++i) r[i] = a[i] - b[i];
  return r;
}

Cyc ExactField::cyc_neg(const Cyc& a) const {
  Cyc r(phi_);
  for (int i = 0; i < phi_; ++i) r[i] = -a[i];
  return r;
}

Cyc ExactField::cyc_mul(const Cyc& a, const Cyc& b) const {
  if (phi_ == 1) return Cyc{a[0] * b[0]};
  std::vector<mpq_class> r(2 * phi_ - 1, mpq_class(0));
  for (int i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < phi_; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  for (int i = 2 * phi_ - 2; i >= phi_; --i) {
    if (r[i] == 0) continue;
    mpq_class c = r[i];
    int shift = i - phi_;
    for (int j = 0; j <= phi_; ++j) r[shift + j] -= c * cyclo_[j];
  }
  r.resize(phi_);
  return r;
}

Cyc ExactField::cyc_inv(const Cyc& a) const {
  if (cyc_is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta)");
  if (phi_ == 1) return Cyc{1 / a[0]};
  QPoly r0(cyclo_.begin(), cyclo_.end());
  QPoly r1(a.begin(), a.end());
  qtrim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    QPoly quo, rem;
    qdivrem(r0, r1, quo, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly s2 = qsub(s0, qmul(quo, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_d is irreducible
  mpq_class c = r0[0];
  QPoly quo, rem;
  QPoly m(cyclo_.begin(), cyclo_.end());
  qdivrem(s0, m, quo, rem);
  Cyc out = cyc_zero();
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return out;
}

void ExactField::trim(CycPoly& p) const {
  while (!p.empty() && cyc_is_zero(p.back())) p.pop_back();
}

CycPoly ExactField::poly_add(const CycPoly& a, const CycPoly& b) const {
  CycPoly r(std::max(a.size(), b.size()), cyc_zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = cyc_add(r[i], b[i]);
  trim(r);
  return r;
}

CycPoly ExactField::poly_sub(const CycPoly& a, const CycPoly& b) const {
  CycPoly r(std::max(a.size(), b.size()), cyc_zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = cyc_sub(r[i], b[i]);
  trim(r);
  return r;
}

CycPoly ExactField::poly_mul(const CycPoly& a, const CycPoly& b) const {
  if (a.empty() || b.empty()) return {};
  CycPoly r(a.size() + b.size() - 1, cyc_zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cyc_is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (cyc_is_zero(b[j])) continue;
      r[i + j] = cyc_add(r[i + j], cyc_mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

CycPoly ExactField::poly_scale(const CycPoly& a, const Cyc& c) const {
  if (cyc_is_zero(c)) return {};
  CycPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = cyc_mul(a[i], c);
  return r;
}

void ExactField::poly_divrem(const CycPoly& a, const CycPoly& b, CycPoly& quo, CycPoly& rem) const {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, cyc_zero());
  Cyc inv_lead = cyc_inv(b.back());
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    if (cyc_is_zero(rem[i])) continue;
    Cyc c = cyc_mul(rem[i], inv_lead);
    std::size_t shift = i - (b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = cyc_sub(rem[shift + j], cyc_mul(c, b[j]));
    quo[shift] = std::move(c);
  }
  trim(rem);
  trim(quo);
}

CycPoly ExactField::monic(const CycPoly& p) const {
  if (p.empty()) return p;
  return poly_scale(p, cyc_inv(p.back()));
}

CycPoly ExactField::poly_gcd(CycPoly a, CycPoly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    CycPoly quo, rem;
    poly_divrem(a, b, quo, rem);
    a = std::move(b);
    b = monic(rem);
  }
  return monic(a);
}

ExactField::Elem ExactField::zero() const {
  Elem z;
  z.den = {cyc_one()};
  return z;
}

ExactField::Elem ExactField::from_mpq(const mpq_class& r) const {
  if (r == 0) return zero();
  Cyc c = cyc_zero();
  c[0] = r;
  return from_cyc(c);
}

ExactField::Elem ExactField::from_cyc(const Cyc& c) const {
  if (cyc_is_zero(c)) return zero();
  Elem e;
  e.num = {c};
  e.den = {cyc_one()};
  return e;
}

ExactField::Elem ExactField::q_power(int sign, long long k) const {
  Cyc c = cyc_zero();
  c[0] = sign < 0 ? -1 : 1;
  Elem e;
  if (k >= 0) {
    e.num.assign(k + 1, cyc_zero());
    e.num[k] = c;
    e.den = {cyc_one()};
  } else {
    e.num = {c};
    e.den.assign(-k + 1, cyc_zero());
    e.den[-k] = cyc_one();
  }
  return e;
}

ExactField::Elem ExactField::a() const {
  if (!a_power_)
    throw Error(ErrorCode::UnsupportedVariable,
                "the exact field carries q only; a must be pinned to a power of q");
  return q_power(a_power_->sign, a_power_->exponent);
}

ExactField::Elem ExactField::normalize(Elem x) const {
  trim(x.num);
  trim(x.den);
  if (x.den.empty()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (x.num.empty()) return zero();
  if (is_monomial(x.den, *this)) {
    std::size_t k = std::min(valuation(x.num, *this), x.den.size() - 1);
    if (k) {
      x.num.erase(x.num.begin(), x.num.begin() + k);
      x.den.erase(x.den.begin(), x.den.begin() + k);
    }
  } else {
    CycPoly g = poly_gcd(x.num, x.den);
    if (g.size() > 1) {
      CycPoly quo, rem;
      poly_divrem(x.num, g, quo, rem);
      x.num = std::move(quo);
      poly_divrem(x.den, g, quo, rem);
      x.den = std::move(quo);
    }
  }
  Cyc lead = x.den.back();
  bool is_unit = lead[0] == 1;
  for (int i = 1; i < phi_ && is_unit; ++i) is_unit = lead[i] == 0;
  if (!is_unit) {
    Cyc il = cyc_inv(lead);
    x.num = poly_scale(x.num, il);
    x.den = poly_scale(x.den, il);
  }
  return x;
}

ExactField::Elem ExactField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r.num) c = cyc_neg(c);
  return r;
}

ExactField::Elem ExactField::add(const Elem& a, const Elem& b) const {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  Elem r;
  if (a.den == b.den) {
    r.num = poly_add(a.num, b.num);
    r.den = a.den;
    if (r.den.size() == 1) return r;
    return normalize(std::move(r));
  }
  if (is_monomial(a.den, *this) && is_monomial(b.den, *this)) {
    std::size_t ka = a.den.size() - 1, kb = b.den.size() - 1, m = std::max(ka, kb);
    CycPoly an(m - ka, cyc_zero()), bn(m - kb, cyc_zero());
    an.insert(an.end(), a.num.begin(), a.num.end());
    bn.insert(bn.end(), b.num.begin(), b.num.end());
    r.num = poly_add(an, bn);
    r.den = m == ka ? a.den : b.den;
    return normalize(std::move(r));
  }
  CycPoly g = poly_gcd(a.den, b.den);
  CycPoly ad = a.den, bd = b.den, rem;
  if (g.size() > 1) {
    poly_divrem(a.den, g, ad, rem);
    poly_divrem(b.den, g, bd, rem);
  }
  r.num = poly_add(poly_mul(a.num, bd), poly_mul(b.num, ad));
  r.den = poly_mul(a.den, bd);
  return normalize(std::move(r));
}

ExactField::Elem ExactField::mul(const Elem& a, const Elem& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  Elem r;
  if (is_monomial(a.den, *this) && is_monomial(b.den, *this)) {
    r.num = poly_mul(a.num, b.num);
    r.den.assign(a.den.size() + b.den.size() - 1, cyc_zero());
    r.den.back() = cyc_one();
    return normalize(std::move(r));
  }
  CycPoly an = a.num, bn = b.num, ad = a.den, bd = b.den, quo, rem;
  CycPoly g1 = poly_gcd(an, bd);
  if (g1.size() > 1) {
    poly_divrem(an, g1, quo, rem);
    an = quo;
    poly_divrem(bd, g1, quo, rem);
    bd = quo;
  }
  CycPoly g2 = poly_gcd(bn, ad);
  if (g2.size() > 1) {
    poly_divrem(bn, g2, quo, rem);
    bn = quo;
    poly_divrem(ad, g2, quo, rem);
    ad = quo;
  }
  r.num = poly_mul(an, bn);
  r.den = poly_mul(ad, bd);
  return r;
}

ExactField::Elem ExactField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Elem r;
  r.num = a.den;
  r.den = a.num;
  Cyc il = cyc_inv(r.den.back());
  r.num = poly_scale(r.num, il);
  r.den = poly_scale(r.den, il);
  return r;
}

ExactField::Elem ExactField::pow(const Elem& a, long long e) const {
  Elem base = e < 0 ? inv(a) : a;
  if (e < 0) e = -e;
  Elem r = one_;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

namespace {

std::string cyc_str(const Cyc& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string poly_str(const CycPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string c = cyc_str(p[i]);
    if (c == "0") continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i == 1) os << "*q";
    if (i > 1) os << "*q^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string ExactField::str(const Elem& a) const {
  if (is_zero(a)) return "0";
  if (a.den.size() == 1) return poly_str(a.num);
  return "[" + poly_str(a.num) + "] / [" + poly_str(a.den) + "]";
}

ModularField::Elem reduce_exact(const ModularField& mf, const ExactField& ef, const RatFunc& x) {
  if (mf.d() != ef.d()) throw Error(ErrorCode::MixedFields, "reduction requires equal d");
  auto cyc_val = [&](const Cyc& c) {
    ModularField::Elem acc = mf.zero(), zp = mf.one();
    for (const auto& coef : c) {
      acc = mf.add(acc, mf.mul(mf.from_mpq(coef), zp));
      zp = mf.mul(zp, mf.zeta());
    }
    return acc;
  };
  auto poly_val = [&](const CycPoly& p) {
    ModularField::Elem acc = mf.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = mf.add(mf.mul(acc, mf.q()), cyc_val(p[i]));
    return acc;
  };
  ModularField::Elem den = poly_val(x.den);
  if (mf.is_zero(den)) throw Error(ErrorCode::BadSpecialization, "denominator vanishes at the specialization");
  return mf.mul(poly_val(x.num), mf.inv(den));
}

}  // namespace framiz
