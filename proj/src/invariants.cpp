#include "expmap/invariants.hpp"

#include <algorithm>
#include <map>

#include "expmap/error.hpp"
#include "expmap/linalg.hpp"

namespace expmap {

DegreeWindow::DegreeWindow(std::uint32_t d) : max_degree(d) {
  if (d < 1) throw Error(ErrorKind::BadArgument, "degree window needs D >= 1");
}

SliceRecord make_slice_record(const ExpMap& map, const MPoly& s) {
  SigmaProfile prof = profile(map, s);
  if (prof.deg_sigma == 0) throw Error(ErrorKind::InvariantElement, s.to_string() + " is invariant");
  return SliceRecord{s, prof.deg_sigma, std::move(prof.lc_sigma)};
}

namespace {

// sigma applied to every window monomial, ascending graded lex.
class WindowSystem {
 public:
  WindowSystem(const ExpMap& map, DegreeWindow window)
      : ring_(map.ring()), columns_(monomials_up_to(ring_->nvars(), window.max_degree)) {
    images_.reserve(columns_.size());
    for (const Monomial& m : columns_) {
      images_.push_back(map.apply(MPoly::term(ring_, m, FieldElem::one(ring_->field()))));
      max_sigma_degree_ = std::max(max_sigma_degree_, images_.back().degree());
    }
  }

  std::size_t max_sigma_degree() const { return max_sigma_degree_; }

  // Nullspace of f -> (delta_i(f))_{i > m} within the window.
  std::vector<MPoly> kernel_above(std::size_t m) const {
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
    for (const SigmaImage& img : images_) {
      for (std::size_t i = m + 1; i < img.coeffs().size(); ++i) {
        for (const auto& term : img.coeffs()[i].terms()) {
          row_of.try_emplace({i, term.first}, row_of.size());
        }
      }
    }
    Matrix mat(ring_->field(), row_of.size(), columns_.size());
    for (std::size_t c = 0; c < images_.size(); ++c) {
      const SigmaImage& img = images_[c];
      for (std::size_t i = m + 1; i < img.coeffs().size(); ++i) {
        for (const auto& [mono, coef] : img.coeffs()[i].terms()) mat.at(row_of.at({i, mono}), c) = coef;
      }
    }
    std::vector<MPoly> out;
    for (const auto& v : nullspace(mat)) {
      MPoly f(ring_);
      for (std::size_t c = 0; c < v.size(); ++c) f.add_term(columns_[c], v[c]);
      out.push_back(std::move(f));
    }
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> columns_;
  std::vector<SigmaImage> images_;
  std::size_t max_sigma_degree_ = 0;
};

// Orders a basis whose vectors have distinct leading monomials.
void sort_by_leading(std::vector<MPoly>& basis) {
  std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) {
    return grlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

}  // namespace

std::vector<MPoly> invariant_basis(const ExpMap& map, DegreeWindow window) {
  std::vector<MPoly> basis = WindowSystem(map, window).kernel_above(0);
  sort_by_leading(basis);
  return basis;
}

LocalSlices find_local_slices(const ExpMap& map, DegreeWindow window) {
  const WindowSystem system(map, window);
  const std::vector<MPoly> invariants = system.kernel_above(0);
  for (std::size_t m = 1; m <= system.max_sigma_degree(); ++m) {
    const std::vector<MPoly> below = system.kernel_above(m);
    if (below.size() == invariants.size()) continue;
    // Complement of the invariants inside V_m, reduced against them.
    PolySpan span(map.ring());
    for (const MPoly& b : invariants) span.insert(b);
    LocalSlices out{m, {}};
    for (const MPoly& v : below) {
      if (auto fresh = span.insert(v)) out.slices.push_back(make_slice_record(map, *fresh));
    }
    return out;
  }
  throw Error(ErrorKind::NoNonInvariantInWindow,
              "every element of degree <= " + std::to_string(window.max_degree) + " is invariant");
}

std::vector<MPoly> plinth_sample(const ExpMap& map, DegreeWindow window) {
  std::vector<MPoly> out;
  for (const SliceRecord& s : find_local_slices(map, window).slices) {
    MPoly lc = s.lc.monic();
    if (std::find(out.begin(), out.end(), lc) == out.end()) out.push_back(std::move(lc));
  }
  return out;
}

PlinthClosureReport check_plinth_closure(const ExpMap& map, DegreeWindow window) {
  const LocalSlices found = find_local_slices(map, window);
  const std::vector<MPoly> invariants = invariant_basis(map, window);
  PlinthClosureReport report;
  auto expect = [&](const MPoly& candidate, const MPoly& lc) {
    ++report.checks;
    const SigmaProfile prof = profile(map, candidate);
    if (prof.deg_sigma != found.m_star || !(prof.lc_sigma == lc)) ++report.failures;
  };
  const auto& slices = found.slices;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (std::size_t j = i + 1; j < slices.size(); ++j) {
      const MPoly lc_sum = slices[i].lc + slices[j].lc;
      if (!lc_sum.is_zero()) expect(slices[i].element + slices[j].element, lc_sum);
    }
    for (const MPoly& b : invariants) expect(b * slices[i].element, b * slices[i].lc);
  }
  return report;
}

MinimalSliceResult minimal_local_slice(const ExpMap& map, DegreeWindow window) {
  const LocalSlices found = find_local_slices(map, window);
  MinimalSliceResult result;
  for (const SliceRecord& s : found.slices) {
    MPoly lc = s.lc.monic();
    if (std::find(result.samples.begin(), result.samples.end(), lc) == result.samples.end()) {
      result.samples.push_back(std::move(lc));
    }
  }
  for (const SliceRecord& s : found.slices) {
    std::vector<bool> row;
    for (const MPoly& sample : result.samples) row.push_back(exact_divide(sample, s.lc).has_value());
    const bool all = std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    if (all && !result.slice) result.slice = s;
    result.divides.push_back(std::move(row));
  }
  return result;
}

bool residue_is_base_field(const ExpMap& map, const MPoly& p, DegreeWindow window) {
  if (p.is_constant()) throw Error(ErrorKind::BadArgument, "p must be a nonzero non-unit");
  if (!map.is_invariant(p)) throw Error(ErrorKind::NotInvariant, p.to_string() + " is not invariant");
  const std::vector<MPoly> invariants = invariant_basis(map, window);
  PolySpan span(map.ring());
  span.insert(MPoly::constant(map.ring(), 1));
  for (const MPoly& b : invariants) span.insert(p * b);
  return std::all_of(invariants.begin(), invariants.end(), [&](const MPoly& b) { return span.contains(b); });
}

bool remark_check_min_slice(const ExpMap& map, const MPoly& s, const MPoly& q, DegreeWindow window) {
  if (q.is_constant()) throw Error(ErrorKind::BadArgument, "q must be a nonzero non-unit");
  if (!map.is_invariant(q)) throw Error(ErrorKind::NotInvariant, q.to_string() + " is not invariant");
  PolySpan span(map.ring());
  for (const MPoly& b : invariant_basis(map, window)) span.insert(b);
  // s - b = q*t forces deg t <= max(deg s, D) - deg q.
  const std::uint64_t top = std::max<std::uint64_t>(s.total_degree(), window.max_degree);
  if (top >= q.total_degree()) {
    const auto bound = static_cast<std::uint32_t>(top - q.total_degree());
    for (const Monomial& m : monomials_up_to(map.ring()->nvars(), bound)) {
      span.insert(q * MPoly::term(map.ring(), m, FieldElem::one(map.ring()->field())));
    }
  }
  return !span.contains(s);
}

}  // namespace expmap
