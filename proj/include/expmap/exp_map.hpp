#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expmap/poly.hpp"

namespace expmap {

// An exponential map sigma: A -> A[x], given by the images of the ring
// variables and extended as a ring homomorphism.
class ExpMap {
 public:
  ExpMap(RingPtr ring, std::vector<SigmaImage> images);

  static ExpMap identity(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<SigmaImage>& images() const noexcept { return images_; }
  const SigmaImage& image(std::size_t var) const { return images_.at(var); }

  /// sigma(f), obtained by substituting the generator images into f.
  SigmaImage apply(const MPoly& f) const;
  /// deg_sigma(f) = 0.
  bool is_invariant(const MPoly& f) const;

 private:
  RingPtr ring_;
  std::vector<SigmaImage> images_;
};

SigmaImage apply(const ExpMap& map, const MPoly& f);

// Result of checking the two axioms on a single element a with
// sigma(a) = Σ a_i x^i.
struct AxiomCheck {
  bool e1;  // a_0 = a
  bool e2;  // Σ sigma(a_i) y^i = Σ a_i (x+y)^i
  MPoly e1_discrepancy;
  BiPoly e2_discrepancy;  // right side minus left side
};

AxiomCheck check_axioms(const ExpMap& map, const MPoly& a);

struct GeneratorVerdict {
  std::string name;
  AxiomCheck check;
};

struct ValidationReport {
  std::vector<GeneratorVerdict> generators;
  bool valid = false;
  std::string justification;

  /// Name of the first generator failing (E2), if any.
  std::optional<std::string> first_e2_failure() const;
};

/// Checks (E1) and (E2) on every ring variable. Failures are reported, not thrown.
ValidationReport validate(const ExpMap& map);

struct SigmaProfile {
  MPoly element;
  SigmaImage image;
  std::size_t deg_sigma;
  MPoly lc_sigma;
};

/// deg_sigma and lc_sigma of a nonzero f. Throws InvariantViolation if
/// lc_sigma(f) is not invariant (impossible for a valid map).
SigmaProfile profile(const ExpMap& map, const MPoly& f);

bool is_nontrivial(const ExpMap& map);

struct LemmaReport {
  std::size_t m = 0;
  // (i): deg_sigma(a_i) <= m - i for every nonzero a_i.
  bool degree_bound = false;
  // (ii): only meaningful in characteristic p.
  bool prime_power_applicable = false;
  bool prime_power_holds = true;
  std::uint64_t l = 0, e = 0, p = 0;
  // (iii): applies when a_1..a_m are all invariant.
  bool additivity_applicable = false;
  bool additivity_holds = true;

  bool all_hold() const { return degree_bound && prime_power_holds && additivity_holds; }
};

/// Runs the three statements derived from (E1)/(E2) on sigma(f) = Σ a_i x^i.
/// Throws InvariantElement if f is invariant.
LemmaReport check_lemma_iterative(const ExpMap& map, const MPoly& f);

/// g(x+y) = g(x) + g(y) for g = Σ_{i>=1} img_i x^i.
bool is_additive(const SigmaImage& img);

/// gcd of C(n, i) for 0 < i < n. Throws BadArgument for n < 2.
mpz_class d_of_n(std::uint64_t n);

struct SliceDegreeReport {
  std::size_t n = 0;
  bool ok = false;  // n = 1 or n = p^d with p = ch(A)
  std::uint64_t p = 0;
  std::uint64_t d = 0;
};

/// For s with lc_sigma(s) = 1; throws NotASlice otherwise.
SliceDegreeReport check_slice_degree_form(const ExpMap& map, const MPoly& s);

}  // namespace expmap
