#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expmap/field.hpp"

namespace expmap {

// Exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);

// Graded lexicographic order over the declared variable order. Maps keyed with
// this comparator iterate from the largest monomial down.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Graded-lex three-way comparison: negative when a < b.
int grlex_compare(const Monomial& a, const Monomial& b);

// Coefficient field plus ordered variable names; identifies A = K[v_1..v_r].
class Ring {
 public:
  /// Rejects duplicate names, malformed identifiers and the reserved `x`, `y`.
  Ring(FieldSpec field, std::vector<std::string> vars);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars);

bool same_ring(const RingPtr& a, const RingPtr& b);

class MPoly {
 public:
  using Terms = std::map<Monomial, FieldElem, GrlexGreater>;

  explicit MPoly(RingPtr ring);

  static MPoly constant(RingPtr ring, const FieldElem& c);
  static MPoly constant(RingPtr ring, long c);
  static MPoly variable(RingPtr ring, std::size_t index);
  static MPoly term(RingPtr ring, Monomial m, const FieldElem& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Total degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const;
  /// Largest monomial under graded lex. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const FieldElem& leading_coeff() const;
  FieldElem coeff(const Monomial& m) const;
  FieldElem constant_term() const;

  /// Divides by the leading coefficient. Zero stays zero.
  MPoly monic() const;
  MPoly scaled(const FieldElem& c) const;
  MPoly pow(std::uint64_t e) const;
  FieldElem evaluate(std::span<const FieldElem> point) const;

  /// Adds c·m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const FieldElem& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string to_string() const;

 private:
  void check_ring(const MPoly& rhs) const;

  RingPtr ring_;
  Terms terms_;
};

enum class PolyOp { Add, Sub, Mul };

MPoly poly_arith(const MPoly& f, const MPoly& g, PolyOp op);

/// q with f = g·q, or nullopt when g does not divide f in A.
std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g);

/// All monomials of total degree <= max_degree, ascending in graded lex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_degree);

// Element of A[x]: coefficient i multiplies x^i. Always holds at least one
// coefficient; trailing zero coefficients are trimmed.
class SigmaImage {
 public:
  explicit SigmaImage(MPoly constant);
  explicit SigmaImage(std::vector<MPoly> coeffs);

  const RingPtr& ring() const noexcept { return coeffs_.front().ring(); }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const MPoly& leading() const noexcept { return coeffs_.back(); }
  const std::vector<MPoly>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  MPoly coeff(std::size_t i) const;
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  SigmaImage operator-() const;
  SigmaImage& operator+=(const SigmaImage& rhs);
  SigmaImage& operator-=(const SigmaImage& rhs);
  friend SigmaImage operator+(SigmaImage a, const SigmaImage& b) { return a += b; }
  friend SigmaImage operator-(SigmaImage a, const SigmaImage& b) { return a -= b; }
  friend SigmaImage operator*(const SigmaImage& a, const SigmaImage& b);
  SigmaImage scaled(const MPoly& c) const;
  SigmaImage pow(std::uint64_t e) const;
  friend bool operator==(const SigmaImage&, const SigmaImage&) = default;

  /// Evaluates at x = 0.
  const MPoly& at_zero() const noexcept { return coeffs_.front(); }

  /// e.g. `v + (u)*x + x^2`.
  std::string to_string() const;

 private:
  void trim();

  std::vector<MPoly> coeffs_;
};

// Element of A[x, y], keyed by (power of x, power of y).
class BiPoly {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  explicit BiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::map<Key, MPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  MPoly coeff(std::uint32_t i, std::uint32_t j) const;

  void add_term(std::uint32_t i, std::uint32_t j, const MPoly& c);

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// e.g. `2*x*y` or `(u + v)*x^2*y`; highest (i + j, i) first.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<Key, MPoly> terms_;
};

/// Σ a_i (x+y)^i expanded in A[x, y]; binomials are reduced in the field.
BiPoly substitute_x_plus_y(const SigmaImage& img);

/// Σ a_i x^i viewed in A[x, y].
BiPoly in_x(const SigmaImage& img);
/// Σ a_i y^i viewed in A[x, y].
BiPoly in_y(const SigmaImage& img);

}  // namespace expmap
