#pragma once

// Test-only helpers: seeded random polynomials and maps, plus small oracles
// (partial derivatives, composition, coefficient extraction) that do not go
// through the library's sigma machinery.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "expmap/exp_map.hpp"
#include "expmap/parse.hpp"
#include "expmap/poly.hpp"

namespace expmap::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  long in_range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline FieldElem random_scalar(Rng& rng, const FieldSpec& field) {
  if (field.is_prime_field()) return FieldElem::from_unsigned(field, rng.below(field.modulus()));
  return FieldElem(field, mpz_class(rng.in_range(-9, 9)), mpz_class(rng.in_range(1, 4)));
}

inline FieldElem random_nonzero_scalar(Rng& rng, const FieldSpec& field) {
  for (;;) {
    FieldElem c = random_scalar(rng, field);
    if (!c.is_zero()) return c;
  }
}

inline MPoly random_poly(Rng& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
  MPoly f(ring);
  const std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(ring->nvars(), 0);
    std::uint32_t budget = static_cast<std::uint32_t>(rng.below(max_degree + 1));
    for (std::size_t j = 0; j < m.size() && budget > 0; ++j) {
      const auto e = static_cast<std::uint32_t>(rng.below(budget + 1));
      m[j] = e;
      budget -= e;
    }
    std::shuffle(m.begin(), m.end(), std::mt19937(static_cast<unsigned>(rng.below(1u << 30))));
    f.add_term(m, random_scalar(rng, ring->field()));
  }
  return f;
}

inline MPoly random_nonzero_poly(Rng& rng, const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree) {
  for (;;) {
    MPoly f = random_poly(rng, ring, max_terms, max_degree);
    if (!f.is_zero()) return f;
  }
}

inline MPoly partial(const MPoly& f, std::size_t var) {
  MPoly out(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * FieldElem(f.field(), static_cast<long>(m[var])));
  }
  return out;
}

// f(images[0], ..., images[r-1]).
inline MPoly compose(const MPoly& f, const std::vector<MPoly>& images) {
  MPoly out(images.front().ring());
  for (const auto& [m, c] : f.terms()) {
    MPoly t = MPoly::constant(out.ring(), c);
    for (std::size_t j = 0; j < m.size(); ++j) t *= images[j].pow(m[j]);
    out += t;
  }
  return out;
}

// Coefficient of var^i in f, as a polynomial in the remaining variables.
inline std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var) {
  std::vector<MPoly> out;
  for (const auto& [m, c] : f.terms()) {
    if (out.size() <= m[var]) out.resize(m[var] + 1, MPoly(f.ring()));
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].add_term(rest, c);
  }
  if (out.empty()) out.emplace_back(f.ring());
  return out;
}

// sigma = exp(x D) for the triangular derivation
//   D = c_2(v_1) d/dv_2 + c_3(v_1, v_2) d/dv_3  (characteristic 0 only).
inline ExpMap random_triangular_char0(Rng& rng, const RingPtr& ring) {
  const FieldSpec field = ring->field();
  std::vector<MPoly> coeff(ring->nvars(), MPoly(ring));
  for (std::size_t j = 1; j < ring->nvars(); ++j) {
    // Restrict c_j to K[v_1..v_{j-1}].
    MPoly c(ring);
    const MPoly draw = random_poly(rng, ring, 3, 2);
    for (const auto& [m, a] : draw.terms()) {
      bool ok = true;
      for (std::size_t k = j; k < m.size(); ++k) ok = ok && m[k] == 0;
      if (ok) c.add_term(m, a);
    }
    coeff[j] = c;
  }
  auto derive = [&](const MPoly& f) {
    MPoly out(ring);
    for (std::size_t j = 0; j < ring->nvars(); ++j) {
      if (!coeff[j].is_zero()) out += coeff[j] * partial(f, j);
    }
    return out;
  };
  std::vector<SigmaImage> images;
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    std::vector<MPoly> terms;
    MPoly current = MPoly::variable(ring, j);
    FieldElem factorial = FieldElem::one(field);
    for (long k = 0; !current.is_zero(); ++k) {
      if (k > 0) factorial *= FieldElem(field, k);
      terms.push_back(current.scaled(factorial.inverse()));
      current = derive(current);
    }
    images.emplace_back(std::move(terms));
  }
  return ExpMap(ring, std::move(images));
}

// sigma(v_1) = v_1, sigma(v_j) = v_j + Σ_e c_{j,e}(v_1) x^{p^e} for e in {0, 1}.
inline ExpMap random_additive_char_p(Rng& rng, const RingPtr& ring) {
  const std::uint64_t p = ring->field().characteristic();
  std::vector<SigmaImage> images;
  images.emplace_back(MPoly::variable(ring, 0));
  for (std::size_t j = 1; j < ring->nvars(); ++j) {
    std::vector<MPoly> coeffs(p + 1, MPoly(ring));
    coeffs[0] = MPoly::variable(ring, j);
    for (std::uint64_t power : {std::uint64_t{1}, p}) {
      if (!rng.coin()) continue;
      MPoly c(ring);
      for (int k = 0; k <= 2; ++k) {
        Monomial m(ring->nvars(), 0);
        m[0] = static_cast<std::uint32_t>(k);
        c.add_term(m, random_scalar(rng, ring->field()));
      }
      coeffs[power] += c;
    }
    images.emplace_back(std::move(coeffs));
  }
  return ExpMap(ring, std::move(images));
}

inline std::vector<FieldElem> random_point(Rng& rng, const RingPtr& ring) {
  std::vector<FieldElem> point;
  for (std::size_t j = 0; j < ring->nvars(); ++j) point.push_back(random_scalar(rng, ring->field()));
  return point;
}

// Frequently used instances.
struct Instances {
  RingPtr quv = make_ring(FieldSpec::rationals(), {"u", "v"});
  RingPtr qv = make_ring(FieldSpec::rationals(), {"v"});
  RingPtr f2 = make_ring(FieldSpec::prime(2), {"y0"});

  MPoly u() const { return MPoly::variable(quv, 0); }
  MPoly v() const { return MPoly::variable(quv, 1); }

  ExpMap map(const RingPtr& ring, const std::vector<std::string>& images) const {
    std::vector<SigmaImage> out;
    for (const std::string& s : images) out.push_back(parse_sigma_image(s, ring));
    return ExpMap(ring, std::move(out));
  }
  ExpMap uv_local() const { return map(quv, {"u", "v + u*x"}); }
  ExpMap uv_translate() const { return map(quv, {"u", "v + x"}); }
  ExpMap v_translate() const { return map(qv, {"v + x"}); }
  ExpMap f2_square() const { return map(f2, {"y0 + x^2"}); }
};

}  // namespace expmap::testing
