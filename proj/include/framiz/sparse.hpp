#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "framiz/errors.hpp"
#include "framiz/field.hpp"

namespace framiz {

// Square matrix in compressed sparse row form.  No stored zeros; column
// indices strictly increasing within a row.
template <class F>
class SparseMatrix {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  SparseMatrix() = default;
  SparseMatrix(FieldHandle<F> f, std::size_t dim) : field_(std::move(f)), dim_(dim), row_ptr_(dim + 1, 0) {}

  static SparseMatrix identity(FieldHandle<F> f, std::size_t dim) {
    SparseMatrix m(f, dim);
    m.cols_.resize(dim);
    m.vals_.assign(dim, f->one());
    for (std::size_t i = 0; i < dim; ++i) {
      m.cols_[i] = static_cast<std::uint32_t>(i);
      m.row_ptr_[i + 1] = i + 1;
    }
    return m;
  }

  static SparseMatrix diag(FieldHandle<F> f, const std::vector<Elem>& d) {
    SparseMatrix m(f, d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!f->is_zero(d[i])) {
        m.cols_.push_back(static_cast<std::uint32_t>(i));
        m.vals_.push_back(d[i]);
      }
      m.row_ptr_[i + 1] = m.cols_.size();
    }
    return m;
  }

  // Entries may repeat (they are summed) and come in any order.
  static SparseMatrix from_triplets(FieldHandle<F> f, std::size_t dim,
                                    std::vector<std::tuple<std::uint32_t, std::uint32_t, Elem>> t) {
    std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
      return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
    });
    SparseMatrix m(f, dim);
    std::size_t k = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      while (k < t.size() && std::get<0>(t[k]) == r) {
        std::uint32_t c = std::get<1>(t[k]);
        Elem acc = std::get<2>(t[k]);
        ++k;
        while (k < t.size() && std::get<0>(t[k]) == r && std::get<1>(t[k]) == c) {
          acc = f->add(acc, std::get<2>(t[k]));
          ++k;
        }
        if (!f->is_zero(acc)) {
          m.cols_.push_back(c);
          m.vals_.push_back(std::move(acc));
        }
      }
      m.row_ptr_[r + 1] = m.cols_.size();
    }
    if (k != t.size()) throw Error(ErrorCode::IndexOutOfRange, "triplet row outside matrix");
    return m;
  }

  // Assembles from finished rows; each row sorted by column without zeros.
  static SparseMatrix from_rows(FieldHandle<F> f, std::vector<std::vector<std::pair<std::uint32_t, Elem>>> rows) {
    SparseMatrix m(f, rows.size());
    std::size_t total = 0;
    for (auto& r : rows) total += r.size();
    m.cols_.reserve(total);
    m.vals_.reserve(total);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (auto& [c, v] : rows[i]) {
        m.cols_.push_back(c);
        m.vals_.push_back(std::move(v));
      }
      m.row_ptr_[i + 1] = m.cols_.size();
    }
    return m;
  }

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return cols_.size(); }
  bool is_zero() const { return cols_.empty(); }
  const F& field() const { return *field_; }
  const FieldHandle<F>& handle() const { return field_; }

  std::size_t row_begin(std::size_t i) const { return row_ptr_[i]; }
  std::size_t row_end(std::size_t i) const { return row_ptr_[i + 1]; }
  std::uint32_t col(std::size_t k) const { return cols_[k]; }
  const Elem& val(std::size_t k) const { return vals_[k]; }

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::uint32_t>& cols() const { return cols_; }
  const std::vector<Elem>& vals() const { return vals_; }

  Elem at(std::size_t i, std::size_t j) const {
    auto b = cols_.begin() + row_ptr_[i], e = cols_.begin() + row_ptr_[i + 1];
    auto it = std::lower_bound(b, e, static_cast<std::uint32_t>(j));
    if (it != e && *it == j) return vals_[it - cols_.begin()];
    return field_->zero();
  }

 private:
  FieldHandle<F> field_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<Elem> vals_;
};

template <class F>
void require_compatible(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.handle() != b.handle()) throw Error(ErrorCode::MixedFields, "matrices live over different fields");
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
}

template <class F>
bool equal(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  require_compatible(a, b);
  if (a.nnz() != b.nnz() || a.row_ptr() != b.row_ptr() || a.cols() != b.cols()) return false;
  const F& f = a.field();
  for (std::size_t k = 0; k < a.nnz(); ++k)
    if (!f.eq(a.val(k), b.val(k))) return false;
  return true;
}

// alpha*A + beta*B
template <class F>
SparseMatrix<F> axpby(const typename F::Elem& alpha, const SparseMatrix<F>& a, const typename F::Elem& beta,
                      const SparseMatrix<F>& b) {
  require_compatible(a, b);
  const F& f = a.field();
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto& out = rows[i];
    std::size_t p = a.row_begin(i), pe = a.row_end(i), r = b.row_begin(i), re = b.row_end(i);
    while (p < pe || r < re) {
      if (r == re || (p < pe && a.col(p) < b.col(r))) {
        auto v = f.mul(alpha, a.val(p));
        if (!f.is_zero(v)) out.emplace_back(a.col(p), std::move(v));
        ++p;
      } else if (p == pe || b.col(r) < a.col(p)) {
        auto v = f.mul(beta, b.val(r));
        if (!f.is_zero(v)) out.emplace_back(b.col(r), std::move(v));
        ++r;
      } else {
        auto v = f.add(f.mul(alpha, a.val(p)), f.mul(beta, b.val(r)));
        if (!f.is_zero(v)) out.emplace_back(a.col(p), std::move(v));
        ++p;
        ++r;
      }
    }
  }
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

template <class F>
SparseMatrix<F> add(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  return axpby(a.field().one(), a, a.field().one(), b);
}

template <class F>
SparseMatrix<F> sub(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  return axpby(a.field().one(), a, a.field().neg(a.field().one()), b);
}

template <class F>
SparseMatrix<F> scale(const typename F::Elem& c, const SparseMatrix<F>& a) {
  const F& f = a.field();
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(a.dim());
  if (!f.is_zero(c)) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = a.row_begin(i); k < a.row_end(i); ++k) rows[i].emplace_back(a.col(k), f.mul(c, a.val(k)));
  }
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.handle() != b.handle()) throw Error(ErrorCode::MixedFields, "matrices live over different fields");
  const F& f = a.field();
  std::size_t n = a.dim(), m = b.dim();
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      auto& out = rows[i * m + k];
      for (std::size_t p = a.row_begin(i); p < a.row_end(i); ++p)
        for (std::size_t r = b.row_begin(k); r < b.row_end(k); ++r)
          out.emplace_back(static_cast<std::uint32_t>(a.col(p) * m + b.col(r)), f.mul(a.val(p), b.val(r)));
    }
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

// Id_{left} (x) A (x) Id_{right}
template <class F>
SparseMatrix<F> embed(const SparseMatrix<F>& a, std::size_t left, std::size_t right) {
  std::size_t m = a.dim(), dim = left * m * right;
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(dim);
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < right; ++r) {
        auto& out = rows[(l * m + i) * right + r];
        for (std::size_t p = a.row_begin(i); p < a.row_end(i); ++p)
          out.emplace_back(static_cast<std::uint32_t>((l * m + a.col(p)) * right + r), a.val(p));
      }
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

// Dense Gauss-Jordan inverse; intended for local operators.
template <class F>
SparseMatrix<F> inverse(const SparseMatrix<F>& a) {
  const F& f = a.field();
  std::size_t n = a.dim();
  using E = typename F::Elem;
  std::vector<std::vector<E>> m(n, std::vector<E>(2 * n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = a.row_begin(i); k < a.row_end(i); ++k) m[i][a.col(k)] = a.val(k);
    m[i][n + i] = f.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m[piv][c])) ++piv;
    if (piv == n) throw Error(ErrorCode::Singular, "matrix is not invertible");
    std::swap(m[piv], m[c]);
    E inv = f.inv(m[c][c]);
    for (auto& x : m[c]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || f.is_zero(m[r][c])) continue;
      E factor = m[r][c];
      for (std::size_t k = c; k < 2 * n; ++k)
        if (!f.is_zero(m[c][k])) m[r][k] = f.sub(m[r][k], f.mul(factor, m[c][k]));
    }
  }
  std::vector<std::vector<std::pair<std::uint32_t, E>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!f.is_zero(m[i][n + j])) rows[i].emplace_back(static_cast<std::uint32_t>(j), m[i][n + j]);
  return SparseMatrix<F>::from_rows(a.handle(), std::move(rows));
}

template <class F>
SparseMatrix<F> transpose(const SparseMatrix<F>& a) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> t;
  t.reserve(a.nnz());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = a.row_begin(i); k < a.row_end(i); ++k)
      t.emplace_back(a.col(k), static_cast<std::uint32_t>(i), a.val(k));
  return SparseMatrix<F>::from_triplets(a.handle(), a.dim(), std::move(t));
}

template <class F>
std::string to_string(const SparseMatrix<F>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) s += " ";
      s += a.field().str(a.at(i, j));
    }
    s += "\n";
  }
  return s;
}

}  // namespace framiz
