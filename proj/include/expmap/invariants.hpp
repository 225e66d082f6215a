#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expmap/exp_map.hpp"

namespace expmap {

// Search space: the K-span of monomials of total degree <= max_degree.
struct DegreeWindow {
  explicit DegreeWindow(std::uint32_t max_degree);
  std::uint32_t max_degree;
};

struct SliceRecord {
  MPoly element;
  std::size_t deg_sigma;
  MPoly lc;
};

/// Builds the record from sigma(s); throws InvariantElement if s is invariant.
SliceRecord make_slice_record(const ExpMap& map, const MPoly& s);

/// K-basis of the invariants inside the window, each with a distinct leading
/// monomial, sorted ascending by it.
std::vector<MPoly> invariant_basis(const ExpMap& map, DegreeWindow window);

// m_star is window-minimal: the least sigma-degree of a non-invariant window
// element, an upper bound for the global minimum.
struct LocalSlices {
  std::size_t m_star;
  std::vector<SliceRecord> slices;
};

/// Throws NoNonInvariantInWindow when the window holds only invariants.
LocalSlices find_local_slices(const ExpMap& map, DegreeWindow window);

/// lc_sigma of the window local slices, made monic and deduplicated.
std::vector<MPoly> plinth_sample(const ExpMap& map, DegreeWindow window);

// Spot-check of the ideal property on window slices: sums with nonzero lc sum
// and invariant multiples stay local slices with the expected lc.
struct PlinthClosureReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

PlinthClosureReport check_plinth_closure(const ExpMap& map, DegreeWindow window);

struct MinimalSliceResult {
  std::optional<SliceRecord> slice;  // empty means inconclusive
  std::vector<MPoly> samples;
  // divides[i][j]: lc of slice i divides sample j.
  std::vector<std::vector<bool>> divides;

  bool inconclusive() const { return !slice.has_value(); }
};

MinimalSliceResult minimal_local_slice(const ExpMap& map, DegreeWindow window);

/// Whether every window invariant is a constant modulo p times invariants.
/// Throws NotInvariant if p is not invariant, BadArgument if p is 0 or a unit.
bool residue_is_base_field(const ExpMap& map, const MPoly& p, DegreeWindow window);

/// True iff no window invariant b makes s - b divisible by q.
bool remark_check_min_slice(const ExpMap& map, const MPoly& s, const MPoly& q, DegreeWindow window);

}  // namespace expmap
