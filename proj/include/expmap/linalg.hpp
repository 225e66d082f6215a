#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "expmap/field.hpp"
#include "expmap/poly.hpp"

namespace expmap {

// Dense row-major matrix over a coefficient field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElem& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const FieldElem& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> entries_;
};

struct ReducedEchelon {
  std::vector<std::vector<FieldElem>> rows;  // nonzero rows only, pivots equal to 1
  std::vector<std::size_t> pivot_cols;       // strictly increasing
};

/// Reduced row echelon form. Pivots are the first nonzero column in order.
/// Over Q the elimination runs fraction-free on integer rows (content removed
/// after every step) and divides by the pivots only at the end.
ReducedEchelon reduced_echelon(const Matrix& m);

/// Nullspace basis, one vector per free column in increasing column order;
/// each vector is 1 at its free column and 0 at every other free column.
std::vector<std::vector<FieldElem>> nullspace(const Matrix& m);

// Subspace of A spanned by inserted polynomials, kept as an echelon basis
// keyed by leading monomial (graded lex).
class PolySpan {
 public:
  explicit PolySpan(RingPtr ring) : ring_(std::move(ring)) {}

  /// Adds f; returns the reduced, monic new basis vector if f was independent.
  std::optional<MPoly> insert(const MPoly& f);
  /// Normal form of f: no remaining term sits on a basis leading monomial.
  MPoly reduce(const MPoly& f) const;
  bool contains(const MPoly& f) const { return reduce(f).is_zero(); }
  std::size_t dim() const noexcept { return basis_.size(); }

 private:
  RingPtr ring_;
  std::map<Monomial, MPoly, GrlexGreater> basis_;
};

}  // namespace expmap
