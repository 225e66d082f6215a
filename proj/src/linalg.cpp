#include "expmap/linalg.hpp"

#include "expmap/error.hpp"

namespace expmap {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field)) {}

namespace {

using IntRow = std::vector<mpz_class>;

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const mpz_class& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1) {
    for (mpz_class& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

ReducedEchelon echelon_rational(const Matrix& m) {
  const std::size_t ncols = m.cols();
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      if (q != 0) nonzero = true;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    if (!nonzero) continue;
    IntRow row(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      row[c] = q.get_num() * (lcm / q.get_den());
    }
    remove_content(row);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][c] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const mpz_class piv = rows[rank][c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const mpz_class factor = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = piv * rows[i][k] - factor * rows[rank][k];
      remove_content(rows[i]);
    }
    pivots.push_back(c);
    ++rank;
  }

  ReducedEchelon out;
  out.pivot_cols = pivots;
  const FieldSpec field = m.field();
  for (std::size_t r = 0; r < rank; ++r) {
    const mpz_class& piv = rows[r][pivots[r]];
    std::vector<FieldElem> row;
    row.reserve(ncols);
    for (std::size_t k = 0; k < ncols; ++k) row.emplace_back(field, rows[r][k], piv);
    out.rows.push_back(std::move(row));
  }
  return out;
}

ReducedEchelon echelon_prime(const Matrix& m) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  const u64 p = m.field().modulus();
  const std::size_t ncols = m.cols();
  auto mul = [p](u64 a, u64 b) { return static_cast<u64>(u128(a) * b % p); };
  auto sub = [p](u64 a, u64 b) { return a >= b ? a - b : a + (p - b); };

  std::vector<std::vector<u64>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<u64> row(ncols);
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      row[c] = m.at(r, c).residue();
      nonzero = nonzero || row[c] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][c] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const u64 inv = FieldElem::from_unsigned(m.field(), rows[rank][c]).inverse().residue();
    for (u64& v : rows[rank]) v = mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] = sub(rows[i][k], mul(factor, rows[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }

  ReducedEchelon out;
  out.pivot_cols = pivots;
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<FieldElem> row;
    row.reserve(ncols);
    for (std::size_t k = 0; k < ncols; ++k) {
      row.push_back(FieldElem::from_unsigned(m.field(), rows[r][k]));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

ReducedEchelon reduced_echelon(const Matrix& m) {
  return m.field().is_prime_field() ? echelon_prime(m) : echelon_rational(m);
}

std::vector<std::vector<FieldElem>> nullspace(const Matrix& m) {
  const ReducedEchelon ech = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<FieldElem> v(m.cols(), FieldElem::zero(m.field()));
    v[j] = FieldElem::one(m.field());
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivot_cols[r]] = -ech.rows[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

MPoly PolySpan::reduce(const MPoly& f) const {
  MPoly rest = f;
  MPoly out(ring_);
  // Eliminating a basis leading monomial only introduces smaller monomials,
  // so one descending sweep reaches the normal form.
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const FieldElem lc = rest.leading_coeff();
    auto it = basis_.find(lm);
    if (it != basis_.end()) {
      rest -= it->second.scaled(lc);
    } else {
      out.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return out;
}

std::optional<MPoly> PolySpan::insert(const MPoly& f) {
  if (!same_ring(f.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "span over a different ring");
  MPoly r = reduce(f);
  if (r.is_zero()) return std::nullopt;
  r = r.monic();
  basis_.emplace(r.leading_monomial(), r);
  return r;
}

}  // namespace expmap
