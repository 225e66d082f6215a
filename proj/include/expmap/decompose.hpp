#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expmap/invariants.hpp"

namespace expmap {

// a^n * (decomposed element) = Σ coeffs[i] * slice^i with every coeffs[i]
// invariant. The coefficient list is dense: zeros are kept up to the top index.
struct Decomposition {
  MPoly slice;
  MPoly denom_base;
  std::uint64_t exponent;
  std::vector<MPoly> coeffs;

  /// Σ coeffs[i] * slice^i.
  MPoly recombine() const;
  /// a^n * f == Σ coeffs[i] * slice^i.
  bool round_trips(const MPoly& f) const;

  /// `denom_exponent: n` followed by one `coeff[i]: <poly>` line per nonzero index.
  std::string serialize() const;
};

/// f as a polynomial in the slice s over the invariants; lc_sigma(s) must be 1.
Decomposition decompose_with_slice(const ExpMap& map, const MPoly& s, const MPoly& f);

/// Pseudo-division by the local slice; the result is normalized by removing
/// common factors of a = lc_sigma(s) from the coefficients.
Decomposition decompose_localized(const ExpMap& map, const SliceRecord& s, const MPoly& f);

/// Lowers the exponent by dividing all coefficients by p_1...p_l while n >= 1.
/// Throws HypothesisViolation(i0, u) when some coefficient blocks the step.
Decomposition reduce_denominator(const ExpMap& map, const Decomposition& dec,
                                 const std::vector<MPoly>& factors);

enum class DomainSource { Checked, Asserted, Missing };

struct FactorReport {
  MPoly factor;
  bool invariant;
  bool divides_lc;
  bool residue_is_base_field;
  bool domain;
  DomainSource domain_source;
  // s is not congruent to an invariant modulo the factor.
  bool slice_not_invariant_mod_factor;

  bool ok() const {
    return invariant && divides_lc && residue_is_base_field && domain && slice_not_invariant_mod_factor;
  }
};

struct HypothesisReport {
  bool factorization_valid;  // Π p_i = lc_sigma(s), or no factors and a unit lc
  std::vector<FactorReport> factors;
  bool pass;
};

/// Throws FactorizationMismatch or NotInvariantFactor; everything else is
/// reported. Degree-1 factors have their domain condition checked directly,
/// higher-degree ones take it from domain_assertions.
HypothesisReport check_theorem_main_hypotheses(const ExpMap& map, const SliceRecord& s,
                                               const std::vector<MPoly>& factors, DegreeWindow window,
                                               const std::vector<bool>& domain_assertions);

struct MonomialVerdict {
  Monomial monomial;
  std::string text;
  bool pass;
  std::optional<Decomposition> decomposition;
  std::string failure;  // empty on pass
};

struct VerificationReport {
  std::vector<MonomialVerdict> monomials;
  std::size_t monomials_passed = 0;
  std::size_t independence_trials = 0;
  std::size_t independence_passed = 0;

  bool pass() const {
    return monomials_passed == monomials.size() && independence_passed == independence_trials;
  }
};

/// Spanning: every window monomial decomposes with exponent 0. Independence:
/// deg_sigma(Σ a_i s^i) = deg_sigma(s) * M for pseudo-random invariant a_i.
VerificationReport verify_polynomial_ring(const ExpMap& map, const MPoly& s, const std::vector<MPoly>& factors,
                                          DegreeWindow window);

}  // namespace expmap
