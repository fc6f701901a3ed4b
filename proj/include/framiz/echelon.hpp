#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "framiz/kernels.hpp"

namespace framiz {

// Sparse vector with strictly increasing indices and no stored zeros.
template <class F>
struct SparseVec {
  std::vector<std::uint64_t> idx;
  std::vector<typename F::Elem> val;
  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }
};

// Row-major flattening of a matrix into a vector of length dim^2.
template <class F>
SparseVec<F> flatten(const SparseMatrix<F>& m) {
  SparseVec<F> v;
  v.idx.reserve(m.nnz());
  v.val.reserve(m.nnz());
  std::uint64_t n = m.dim();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = m.row_begin(i); k < m.row_end(i); ++k) {
      v.idx.push_back(i * n + m.col(k));
      v.val.push_back(m.val(k));
    }
  return v;
}

template <class F>
SparseMatrix<F> unflatten(const FieldHandle<F>& f, std::size_t dim, const SparseVec<F>& v) {
  std::vector<std::vector<std::pair<std::uint32_t, typename F::Elem>>> rows(dim);
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::uint64_t r = v.idx[k] / dim, c = v.idx[k] % dim;
    rows[r].emplace_back(static_cast<std::uint32_t>(c), v.val[k]);
  }
  return SparseMatrix<F>::from_rows(f, std::move(rows));
}

// Fully reduced row echelon basis: every pivot is 1 and is the smallest index
// of its row, and no other row has an entry in a pivot column.
template <class F>
class EchelonBasis {
 public:
  using Elem = typename F::Elem;

  explicit EchelonBasis(FieldHandle<F> f) : field_(std::move(f)) {}

  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return *field_; }
  const FieldHandle<F>& handle() const { return field_; }

  // v minus its projection along the basis.
  SparseVec<F> reduce(const SparseVec<F>& v) const {
    const F& f = *field_;
    std::vector<std::pair<std::size_t, Elem>> hits;
    for (std::size_t k = 0; k < v.size(); ++k) {
      auto it = pivot_row_.find(v.idx[k]);
      if (it != pivot_row_.end()) hits.emplace_back(it->second, v.val[k]);
    }
    if (hits.empty()) return v;
    std::vector<std::pair<std::uint64_t, Elem>> terms;
    std::size_t total = v.size();
    for (auto& h : hits) total += rows_[h.first].size();
    terms.reserve(total);
    for (std::size_t k = 0; k < v.size(); ++k) terms.emplace_back(v.idx[k], v.val[k]);
    for (auto& [r, c] : hits) {
      Elem nc = f.neg(c);
      const auto& row = rows_[r];
      for (std::size_t k = 0; k < row.size(); ++k) terms.emplace_back(row.idx[k], f.mul(nc, row.val[k]));
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<F> out;
    for (std::size_t k = 0; k < terms.size();) {
      std::uint64_t i = terms[k].first;
      Elem acc = std::move(terms[k].second);
      ++k;
      while (k < terms.size() && terms[k].first == i) {
        acc = f.add(acc, terms[k].second);
        ++k;
      }
      if (!f.is_zero(acc)) {
        out.idx.push_back(i);
        out.val.push_back(std::move(acc));
      }
    }
    return out;
  }

  // Adds v to the span.  Returns the normalized new row (as inserted), or
  // nothing when v was already in the span.
  std::optional<SparseVec<F>> insert(const SparseVec<F>& v) {
    const F& f = *field_;
    SparseVec<F> w = reduce(v);
    if (w.empty()) return std::nullopt;
    Elem s = f.inv(w.val[0]);
    for (auto& x : w.val) x = f.mul(s, x);
    std::uint64_t p = w.idx[0];
    for (auto& row : rows_) {
      auto it = std::lower_bound(row.idx.begin(), row.idx.end(), p);
      if (it == row.idx.end() || *it != p) continue;
      Elem c = row.val[it - row.idx.begin()];
      row = axpy_vec(row, f.neg(c), w);
    }
    pivot_row_.emplace(p, rows_.size());
    pivots_.push_back(p);
    rows_.push_back(w);
    return w;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  // Rows ordered by pivot.
  std::vector<SparseVec<F>> rows_sorted() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<SparseVec<F>> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(rows_[i]);
    return out;
  }

  const std::vector<SparseVec<F>>& rows() const { return rows_; }
  const std::vector<std::uint64_t>& pivots() const { return pivots_; }

 private:
  SparseVec<F> axpy_vec(const SparseVec<F>& a, const Elem& c, const SparseVec<F>& b) const {
    const F& f = *field_;
    SparseVec<F> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.idx[i] < b.idx[j])) {
        out.idx.push_back(a.idx[i]);
        out.val.push_back(a.val[i]);
        ++i;
      } else if (i == a.size() || b.idx[j] < a.idx[i]) {
        out.idx.push_back(b.idx[j]);
        out.val.push_back(f.mul(c, b.val[j]));
        ++j;
      } else {
        Elem x = f.add(a.val[i], f.mul(c, b.val[j]));
        if (!f.is_zero(x)) {
          out.idx.push_back(a.idx[i]);
          out.val.push_back(std::move(x));
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  FieldHandle<F> field_;
  std::vector<SparseVec<F>> rows_;
  std::vector<std::uint64_t> pivots_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_row_;
};

template <class F>
struct RrefResult {
  std::vector<SparseVec<F>> basis;  // ordered by pivot
  std::size_t rank = 0;
};

template <class F>
RrefResult<F> rref(const FieldHandle<F>& f, const std::vector<SparseVec<F>>& rows) {
  EchelonBasis<F> eb(f);
  for (const auto& r : rows) eb.insert(r);
  return {eb.rows_sorted(), eb.rank()};
}

}  // namespace framiz
