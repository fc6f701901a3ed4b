#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "framiz/sparse.hpp"

namespace framiz {

enum class Exec { Serial, Parallel };

// Process-wide default used by the algebra routines; tests flip it to
// compare the two paths.
inline Exec& default_exec() {
  static Exec e = Exec::Parallel;
  return e;
}

namespace kernels {

// Row-wise Gustavson product with a dense scatter accumulator.
template <class F>
struct RowAccumulator {
  using Elem = typename F::Elem;
  std::vector<Elem> acc;
  std::vector<char> used;
  std::vector<std::uint32_t> touched;

  void reset(const F& f, std::size_t dim) {
    if (acc.size() != dim) {
      acc.assign(dim, f.zero());
      used.assign(dim, 0);
    }
    touched.clear();
  }

  void row_product(const SparseMatrix<F>& a, const SparseMatrix<F>& b, std::size_t i,
                   std::vector<std::pair<std::uint32_t, Elem>>& out) {
    const F& f = a.field();
    for (std::size_t p = a.row_begin(i); p < a.row_end(i); ++p) {
      const Elem& x = a.val(p);
      std::size_t k = a.col(p);
      for (std::size_t r = b.row_begin(k); r < b.row_end(k); ++r) {
        std::uint32_t j = b.col(r);
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = f.mul(x, b.val(r));
        } else {
          f.fma(acc[j], x, b.val(r));
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    out.clear();
    for (std::uint32_t j : touched) {
      if (!f.is_zero(acc[j])) out.emplace_back(j, std::move(acc[j]));
      acc[j] = f.zero();
      used[j] = 0;
    }
    touched.clear();
  }
};

template <class F>
SparseMatrix<F> spmm_serial(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_compatible(a, b);
  std::size_t n = a.dim();
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(n);
  RowAccumulator<F> ra;
  ra.reset(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) ra.row_product(a, b, i, rows[i]);
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

template <class F>
SparseMatrix<F> spmm_omp(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_compatible(a, b);
  std::size_t n = a.dim();
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(n);
#pragma omp parallel
  {
    RowAccumulator<F> ra;
    ra.reset(a.field(), n);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) ra.row_product(a, b, i, rows[i]);
  }
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

}  // namespace kernels

template <class F>
SparseMatrix<F> mul(const SparseMatrix<F>& a, const SparseMatrix<F>& b, Exec e = default_exec()) {
  return e == Exec::Parallel ? kernels::spmm_omp(a, b) : kernels::spmm_serial(a, b);
}

template <class F>
SparseMatrix<F> mul_chain(const std::vector<const SparseMatrix<F>*>& factors, Exec e = default_exec()) {
  SparseMatrix<F> r = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = mul(r, *factors[i], e);
  return r;
}

template <class F>
SparseMatrix<F> power(const SparseMatrix<F>& a, unsigned k, Exec e = default_exec()) {
  SparseMatrix<F> r = SparseMatrix<F>::identity(a.handle(), a.dim());
  for (unsigned i = 0; i < k; ++i) r = mul(r, a, e);
  return r;
}

}  // namespace framiz
