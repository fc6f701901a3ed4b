#pragma once

#include <cstdint>
#include <vector>

#include "framiz/echelon.hpp"

namespace framiz {

struct ClosureOptions {
  bool with_identity = true;
  std::size_t rank_cap = 20000;
  std::size_t batch = 64;
  std::size_t batch_entries = 20'000'000;  // bound on product nonzeros held at once
  Exec exec = default_exec();
};

template <class F>
struct ClosureResult {
  std::size_t dimension = 0;
  EchelonBasis<F> basis;
  std::vector<SparseMatrix<F>> elements;  // one spanning element per basis row, in insertion order
  std::size_t rounds = 0;
};

namespace kernels {

template <class F>
void reduce_batch_serial(const EchelonBasis<F>& eb, std::vector<SparseVec<F>>& vs) {
  for (auto& v : vs) v = eb.reduce(v);
}

template <class F>
void reduce_batch_omp(const EchelonBasis<F>& eb, std::vector<SparseVec<F>>& vs) {
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(vs.size()); ++i) vs[i] = eb.reduce(vs[i]);
}

}  // namespace kernels

// Dimension of the (unital, if requested) algebra generated by gens: the
// span is grown by multiplying each new element by every generator on both
// sides until nothing new appears.
template <class F>
ClosureResult<F> subalgebra_dimension(const std::vector<SparseMatrix<F>>& gens, const ClosureOptions& opt = {}) {
  if (gens.empty()) throw Error(ErrorCode::DimensionMismatch, "no generators given");
  const auto& fh = gens.front().handle();
  std::size_t dim = gens.front().dim();
  for (const auto& g : gens) require_compatible(gens.front(), g);

  ClosureResult<F> res{0, EchelonBasis<F>(fh), {}, 0};
  auto& eb = res.basis;
  std::vector<SparseMatrix<F>> frontier;

  auto try_add = [&](const SparseVec<F>& v) {
    auto row = eb.insert(v);
    if (!row) return;
    if (eb.rank() > opt.rank_cap)
      throw Error(ErrorCode::DimensionOverflow, "closure exceeded rank cap " + std::to_string(opt.rank_cap));
    SparseMatrix<F> m = unflatten(fh, dim, *row);
    res.elements.push_back(m);
    frontier.push_back(std::move(m));
  };

  if (opt.with_identity) try_add(flatten(SparseMatrix<F>::identity(fh, dim)));
  for (const auto& g : gens) try_add(flatten(g));

  while (!frontier.empty()) {
    ++res.rounds;
    std::vector<SparseMatrix<F>> current;
    current.swap(frontier);
    for (std::size_t start = 0, stop = 0; start < current.size(); start = stop) {
      std::size_t budget = 0;
      stop = start;
      while (stop < current.size() && stop - start < opt.batch &&
             (stop == start || budget + current[stop].nnz() * 2 * gens.size() <= opt.batch_entries)) {
        budget += current[stop].nnz() * 2 * gens.size();
        ++stop;
      }
      std::size_t np = (stop - start) * gens.size() * 2;
      std::vector<SparseVec<F>> cand(np);
      auto product = [&](std::size_t t) {
        std::size_t e = start + t / (2 * gens.size());
        std::size_t g = (t / 2) % gens.size();
        SparseMatrix<F> p = (t % 2 == 0) ? kernels::spmm_serial(current[e], gens[g])
                                         : kernels::spmm_serial(gens[g], current[e]);
        cand[t] = flatten(p);
      };
      if (opt.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(np); ++t) product(t);
        kernels::reduce_batch_omp(eb, cand);
      } else {
        for (std::size_t t = 0; t < np; ++t) product(t);
        kernels::reduce_batch_serial(eb, cand);
      }
      for (auto& v : cand)
        if (!v.empty()) try_add(v);
    }
  }
  res.dimension = eb.rank();
  return res;
}

template <class F>
struct BlockSplit {
  std::vector<std::vector<std::size_t>> dims;  // dims[mu][nu] = dim span{pi_mu f pi_nu}
  std::size_t diagonal_total = 0;
  std::size_t residue = 0;  // total off-diagonal dimension
};

template <class F>
BlockSplit<F> block_split(const std::vector<SparseMatrix<F>>& basis, const std::vector<SparseMatrix<F>>& idem,
                          Exec exec = default_exec()) {
  if (idem.empty()) throw Error(ErrorCode::NotPartitionOfUnity, "no idempotents given");
  const auto& fh = idem.front().handle();
  std::size_t dim = idem.front().dim();
  SparseMatrix<F> total(fh, dim);
  for (std::size_t a = 0; a < idem.size(); ++a) {
    require_compatible(idem.front(), idem[a]);
    if (!equal(mul(idem[a], idem[a], exec), idem[a]))
      throw Error(ErrorCode::NotIdempotent, "idempotent " + std::to_string(a) + " does not square to itself");
    for (std::size_t b = 0; b < idem.size(); ++b)
      if (a != b && !mul(idem[a], idem[b], exec).is_zero())
        throw Error(ErrorCode::NotOrthogonal,
                    "idempotents " + std::to_string(a) + " and " + std::to_string(b) + " are not orthogonal");
    total = add(total, idem[a]);
  }
  if (!equal(total, SparseMatrix<F>::identity(fh, dim)))
    throw Error(ErrorCode::NotPartitionOfUnity, "idempotents do not sum to the identity");

  BlockSplit<F> out;
  std::size_t k = idem.size();
  out.dims.assign(k, std::vector<std::size_t>(k, 0));
  std::vector<SparseMatrix<F>> left(basis.size());
  for (std::size_t mu = 0; mu < k; ++mu) {
    for (std::size_t i = 0; i < basis.size(); ++i) left[i] = mul(idem[mu], basis[i], exec);
    for (std::size_t nu = 0; nu < k; ++nu) {
      EchelonBasis<F> eb(fh);
      for (std::size_t i = 0; i < basis.size(); ++i) eb.insert(flatten(mul(left[i], idem[nu], exec)));
      out.dims[mu][nu] = eb.rank();
      if (mu == nu)
        out.diagonal_total += eb.rank();
      else
        out.residue += eb.rank();
    }
  }
  return out;
}

// Monic minimal polynomial, coefficients from degree 0 upwards.
template <class F>
std::vector<typename F::Elem> minimal_polynomial(const SparseMatrix<F>& a, Exec exec = default_exec()) {
  const F& f = a.field();
  std::uint64_t n2 = static_cast<std::uint64_t>(a.dim()) * a.dim();
  EchelonBasis<F> eb(a.handle());
  SparseMatrix<F> pw = SparseMatrix<F>::identity(a.handle(), a.dim());
  for (std::size_t k = 0;; ++k) {
    SparseVec<F> v = flatten(pw);
    v.idx.push_back(n2 + k);
    v.val.push_back(f.one());
    SparseVec<F> r = eb.reduce(v);
    if (r.idx.front() >= n2) {
      std::vector<typename F::Elem> coeffs(k + 1, f.zero());
      for (std::size_t t = 0; t < r.size(); ++t) coeffs[r.idx[t] - n2] = r.val[t];
      auto lead = f.inv(coeffs[k]);
      for (auto& c : coeffs) c = f.mul(c, lead);
      return coeffs;
    }
    eb.insert(r);
    pw = mul(pw, a, exec);
  }
}

}  // namespace framiz
