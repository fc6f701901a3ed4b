#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "framiz/framed.hpp"

namespace framiz {

// Formal expression in generator symbols and scalars.
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/' | juxtaposition) unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] int)?
//   atom   := int | q | a | z | t<i> | s<i> | E<i>[_<j>] | e<i> | L<i> | '(' expr ')'
// z is the primitive d-th root of unity; L<i> is the q-antisymmetrizer on
// s_i, s_{i+1}.  Division is allowed by scalars only.
struct Expr {
  enum class Kind { Num, Q, A, Zeta, Gen, Lambda3, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Num;
  mpq_class num;
  std::string sym;  // generator key understood by GeneratorAssignment
  int index = 0;
  long long exponent = 0;
  std::vector<std::shared_ptr<const Expr>> kids;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_word(const std::string& text);
std::string to_string(const Expr& e);
// Generator keys appearing in an expression (L<i> contributes s_i, s_{i+1}).
std::vector<std::string> symbols_of(const Expr& e);

// Scalar values the evaluator needs besides the assignment.
template <class F>
struct WordContext {
  std::optional<typename F::Elem> a;
};

template <class F>
struct WordValue {
  bool scalar = true;
  typename F::Elem s{};
  SparseMatrix<F> m;
};

namespace detail {

template <class F>
SparseMatrix<F> as_matrix(const WordValue<F>& v, const FieldHandle<F>& fh, std::size_t dim) {
  if (!v.scalar) return v.m;
  return scale(v.s, SparseMatrix<F>::identity(fh, dim));
}

template <class F>
bool is_diagonal(const SparseMatrix<F>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = m.row_begin(i); k < m.row_end(i); ++k)
      if (m.col(k) != i) return false;
  return true;
}

template <class F>
SparseMatrix<F> invert_generator(const SparseMatrix<F>& m, const std::string& sym, const GeneratorAssignment<F>& g) {
  if (is_diagonal(m)) {
    const F& f = m.field();
    std::vector<typename F::Elem> dg(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
      auto v = m.at(i, i);
      if (f.is_zero(v)) throw Error(ErrorCode::Singular, sym + " is not invertible");
      dg[i] = f.inv(v);
    }
    return SparseMatrix<F>::diag(m.handle(), dg);
  }
  if (!sym.empty() && sym[0] == 's') return g.get(sym + "^-1");
  throw Error(ErrorCode::Singular, "no inverse available for " + sym);
}

}  // namespace detail

template <class F>
WordValue<F> eval_value(const Expr& e, const GeneratorAssignment<F>& g, const WordContext<F>& ctx) {
  const auto& setup = g.setup();
  const F& f = *setup.field;
  std::size_t dim = setup.ambient();
  using V = WordValue<F>;
  auto scalar = [](typename F::Elem x) {
    V v;
    v.s = x;
    return v;
  };
  auto matrix = [](SparseMatrix<F> m) {
    V v;
    v.scalar = false;
    v.m = std::move(m);
    return v;
  };
  switch (e.kind) {
    case Expr::Kind::Num: return scalar(f.from_mpq(e.num));
    case Expr::Kind::Q: return scalar(f.q());
    case Expr::Kind::A:
      if (!ctx.a) throw Error(ErrorCode::UnresolvedSymbol, "'a' has no value for this setup");
      return scalar(*ctx.a);
    case Expr::Kind::Zeta: return scalar(f.zeta());
    case Expr::Kind::Gen: return matrix(g.get(e.sym));
    case Expr::Kind::Lambda3: {
      auto s1 = "s" + std::to_string(e.index), s2 = "s" + std::to_string(e.index + 1);
      return matrix(q_antisymmetrizer(g.get(s1), g.get(s2)));
    }
    case Expr::Kind::Neg: {
      auto v = eval_value(*e.kids[0], g, ctx);
      if (v.scalar) return scalar(f.neg(v.s));
      return matrix(scale(f.neg(f.one()), v.m));
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      auto l = eval_value(*e.kids[0], g, ctx), r = eval_value(*e.kids[1], g, ctx);
      bool sub = e.kind == Expr::Kind::Sub;
      if (l.scalar && r.scalar) return scalar(sub ? f.sub(l.s, r.s) : f.add(l.s, r.s));
      auto lm = detail::as_matrix(l, setup.field, dim), rm = detail::as_matrix(r, setup.field, dim);
      return matrix(axpby(f.one(), lm, sub ? f.neg(f.one()) : f.one(), rm));
    }
    case Expr::Kind::Mul: {
      auto l = eval_value(*e.kids[0], g, ctx), r = eval_value(*e.kids[1], g, ctx);
      if (l.scalar && r.scalar) return scalar(f.mul(l.s, r.s));
      if (l.scalar) return matrix(scale(l.s, r.m));
      if (r.scalar) return matrix(scale(r.s, l.m));
      return matrix(mul(l.m, r.m));
    }
    case Expr::Kind::Div: {
      auto l = eval_value(*e.kids[0], g, ctx), r = eval_value(*e.kids[1], g, ctx);
      if (!r.scalar) throw Error(ErrorCode::ParseError, "division by a non-scalar");
      if (f.is_zero(r.s)) throw Error(ErrorCode::DivisionByZero, "division by zero in word");
      auto ri = f.inv(r.s);
      if (l.scalar) return scalar(f.mul(l.s, ri));
      return matrix(scale(ri, l.m));
    }
    case Expr::Kind::Pow: {
      const Expr& base = *e.kids[0];
      auto b = eval_value(base, g, ctx);
      long long k = e.exponent;
      if (b.scalar) return scalar(f.pow(b.s, k));
      SparseMatrix<F> m = b.m;
      if (k < 0) {
        m = detail::invert_generator(m, base.kind == Expr::Kind::Gen ? base.sym : std::string(), g);
        k = -k;
      }
      return matrix(power(m, static_cast<unsigned>(k)));
    }
  }
  throw Error(ErrorCode::ParseError, "bad expression node");
}

template <class F>
SparseMatrix<F> eval_word(const Expr& e, const GeneratorAssignment<F>& g, const WordContext<F>& ctx = {}) {
  return detail::as_matrix(eval_value(e, g, ctx), g.setup().field, g.setup().ambient());
}

template <class F>
SparseMatrix<F> eval_word(const std::string& text, const GeneratorAssignment<F>& g, const WordContext<F>& ctx = {}) {
  return eval_word(*parse_word(text), g, ctx);
}

}  // namespace framiz
