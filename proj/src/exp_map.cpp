#include "expmap/exp_map.hpp"

#include "expmap/error.hpp"

namespace expmap {

ExpMap::ExpMap(RingPtr ring, std::vector<SigmaImage> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->nvars()) {
    throw Error(ErrorKind::BadArgument, "need exactly one image per ring variable");
  }
  for (const SigmaImage& img : images_) {
    if (!same_ring(img.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "image over a different ring");
  }
}

ExpMap ExpMap::identity(RingPtr ring) {
  std::vector<SigmaImage> images;
  for (std::size_t j = 0; j < ring->nvars(); ++j) images.emplace_back(MPoly::variable(ring, j));
  return ExpMap(ring, std::move(images));
}

SigmaImage ExpMap::apply(const MPoly& f) const {
  if (!same_ring(f.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "element over a different ring");
  // powers[j][e] = image_j^e, filled on demand.
  std::vector<std::vector<SigmaImage>> powers(ring_->nvars());
  auto power = [&](std::size_t j, std::uint32_t e) -> const SigmaImage& {
    auto& cache = powers[j];
    if (cache.empty()) cache.emplace_back(MPoly::constant(ring_, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images_[j]);
    return cache[e];
  };
  SigmaImage result{MPoly(ring_)};
  for (const auto& [m, c] : f.terms()) {
    SigmaImage t{MPoly::constant(ring_, c)};
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] != 0) t = t * power(j, m[j]);
    }
    result += t;
  }
  return result;
}

bool ExpMap::is_invariant(const MPoly& f) const { return apply(f).degree() == 0; }

SigmaImage apply(const ExpMap& map, const MPoly& f) { return map.apply(f); }

AxiomCheck check_axioms(const ExpMap& map, const MPoly& a) {
  const SigmaImage img = map.apply(a);
  MPoly e1_gap = img.at_zero() - a;
  BiPoly lhs(map.ring());
  for (std::size_t i = 0; i < img.coeffs().size(); ++i) {
    const SigmaImage inner = map.apply(img.coeffs()[i]);
    for (std::size_t k = 0; k < inner.coeffs().size(); ++k) {
      lhs.add_term(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(i), inner.coeffs()[k]);
    }
  }
  BiPoly e2_gap = substitute_x_plus_y(img) - lhs;
  const bool e1 = e1_gap.is_zero();
  const bool e2 = e2_gap.is_zero();
  return AxiomCheck{e1, e2, std::move(e1_gap), std::move(e2_gap)};
}

std::optional<std::string> ValidationReport::first_e2_failure() const {
  for (const GeneratorVerdict& g : generators) {
    if (!g.check.e2) return g.name;
  }
  return std::nullopt;
}

ValidationReport validate(const ExpMap& map) {
  ValidationReport report;
  report.valid = true;
  for (std::size_t j = 0; j < map.ring()->nvars(); ++j) {
    AxiomCheck check = check_axioms(map, MPoly::variable(map.ring(), j));
    report.valid = report.valid && check.e1 && check.e2;
    report.generators.push_back({map.ring()->vars()[j], std::move(check)});
  }
  report.justification =
      "(E2) checked on generators only: both sides are ring homomorphisms A -> A[x,y] "
      "in the element, so agreement on generators gives agreement on all of A";
  return report;
}

SigmaProfile profile(const ExpMap& map, const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "deg_sigma(0) is undefined");
  SigmaImage img = map.apply(f);
  const std::size_t deg = img.degree();
  MPoly lc = img.leading();
  if (deg > 0 && !map.is_invariant(lc)) {
    throw Error(ErrorKind::InvariantViolation, "lc_sigma(" + f.to_string() + ") = " + lc.to_string() +
                                                   " is not invariant; the map is not exponential");
  }
  return SigmaProfile{f, std::move(img), deg, std::move(lc)};
}

bool is_nontrivial(const ExpMap& map) {
  for (const SigmaImage& img : map.images()) {
    if (img.degree() >= 1) return true;
  }
  return false;
}

bool is_additive(const SigmaImage& img) {
  std::vector<MPoly> tail = img.coeffs();
  tail[0] = MPoly(img.ring());
  const SigmaImage g(std::move(tail));
  return substitute_x_plus_y(g) == in_x(g) + in_y(g);
}

LemmaReport check_lemma_iterative(const ExpMap& map, const MPoly& f) {
  const SigmaImage img = map.apply(f);
  const std::size_t m = img.degree();
  if (m == 0) throw Error(ErrorKind::InvariantElement, f.to_string() + " is invariant");

  LemmaReport r;
  r.m = m;
  r.degree_bound = true;
  std::vector<std::size_t> degrees(m + 1, 0);
  bool tail_invariant = true;
  for (std::size_t i = 0; i <= m; ++i) {
    const MPoly& a = img.coeffs()[i];
    if (a.is_zero()) continue;
    degrees[i] = map.apply(a).degree();
    if (degrees[i] > m - i) r.degree_bound = false;
    if (i >= 1 && degrees[i] != 0) tail_invariant = false;
  }

  const std::uint64_t p = map.ring()->field().characteristic();
  if (p != 0) {
    r.prime_power_applicable = true;
    r.p = p;
    std::uint64_t l = m, e = 0, pe = 1;
    while (l % p == 0) {
      l /= p;
      pe *= p;
      ++e;
    }
    r.l = l;
    r.e = e;
    const std::size_t idx = static_cast<std::size_t>((l - 1) * pe);
    r.prime_power_holds = !img.coeffs()[idx].is_zero() && degrees[idx] == pe;
  }

  r.additivity_applicable = tail_invariant;
  if (tail_invariant) r.additivity_holds = is_additive(img);
  return r;
}

mpz_class d_of_n(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::BadArgument, "d(n) needs n >= 2");
  mpz_class binom = 1;
  mpz_class g = 0;
  for (unsigned long i = 1; i <= n / 2; ++i) {
    // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step.
    binom *= static_cast<unsigned long>(n - i + 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), binom.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

SliceDegreeReport check_slice_degree_form(const ExpMap& map, const MPoly& s) {
  const SigmaProfile prof = profile(map, s);
  if (prof.deg_sigma == 0 || !prof.lc_sigma.is_one()) {
    throw Error(ErrorKind::NotASlice, "lc_sigma(" + s.to_string() + ") = " + prof.lc_sigma.to_string());
  }
  SliceDegreeReport r;
  r.n = prof.deg_sigma;
  r.p = map.ring()->field().characteristic();
  if (r.n == 1) {
    r.ok = true;
    return r;
  }
  if (r.p != 0) {
    std::uint64_t n = r.n, d = 0;
    while (n % r.p == 0) {
      n /= r.p;
      ++d;
    }
    if (n == 1) {
      r.ok = true;
      r.d = d;
    }
  }
  return r;
}

}  // namespace expmap
