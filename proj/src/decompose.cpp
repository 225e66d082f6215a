#include "expmap/decompose.hpp"

#include <algorithm>
#include <random>

#include "expmap/error.hpp"

namespace expmap {
namespace {

void trim(std::vector<MPoly>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
}

void add_at(std::vector<MPoly>& coeffs, std::size_t i, const MPoly& v) {
  if (coeffs.size() <= i) coeffs.resize(i + 1, MPoly(v.ring()));
  coeffs[i] += v;
}

// Powers of a fixed element, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(const MPoly& base) : powers_{MPoly::constant(base.ring(), 1)}, base_(base) {}

  const MPoly& operator()(std::size_t e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  std::vector<MPoly> powers_;
  MPoly base_;
};

std::size_t quotient_degree(std::size_t m, std::size_t n_s) {
  if (m % n_s != 0) {
    throw Error(ErrorKind::DegreeNotDivisible, "deg_sigma " + std::to_string(m) +
                                                   " is not a multiple of the slice degree " +
                                                   std::to_string(n_s));
  }
  return m / n_s;
}

void check_descent(std::size_t before, const MPoly& rest, const ExpMap& map) {
  if (!rest.is_zero() && map.apply(rest).degree() >= before) {
    throw Error(ErrorKind::InvariantViolation, "sigma-degree did not drop during decomposition");
  }
}

MPoly product(const RingPtr& ring, const std::vector<MPoly>& factors) {
  MPoly out = MPoly::constant(ring, 1);
  for (const MPoly& p : factors) out *= p;
  return out;
}

}  // namespace

MPoly Decomposition::recombine() const {
  MPoly sum(slice.ring());
  MPoly power = MPoly::constant(slice.ring(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power *= slice;
    if (!coeffs[i].is_zero()) sum += coeffs[i] * power;
  }
  return sum;
}

bool Decomposition::round_trips(const MPoly& f) const {
  return denom_base.pow(exponent) * f == recombine();
}

std::string Decomposition::serialize() const {
  std::string out = "denom_exponent: " + std::to_string(exponent) + "\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out += "coeff[" + std::to_string(i) + "]: " + coeffs[i].to_string() + "\n";
  }
  return out;
}

Decomposition decompose_with_slice(const ExpMap& map, const MPoly& s, const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "cannot decompose 0");
  const SigmaProfile ps = profile(map, s);
  if (ps.deg_sigma == 0 || !ps.lc_sigma.is_one()) {
    throw Error(ErrorKind::NotASlice, "lc_sigma(" + s.to_string() + ") = " + ps.lc_sigma.to_string());
  }
  const std::size_t n_s = ps.deg_sigma;
  PowerCache s_pow(s);
  std::vector<MPoly> coeffs{MPoly(map.ring())};
  MPoly rest = f;
  while (!rest.is_zero()) {
    const SigmaProfile pr = profile(map, rest);
    if (pr.deg_sigma == 0) {
      add_at(coeffs, 0, rest);
      break;
    }
    const std::size_t k = quotient_degree(pr.deg_sigma, n_s);
    add_at(coeffs, k, pr.lc_sigma);
    rest -= pr.lc_sigma * s_pow(k);
    check_descent(pr.deg_sigma, rest, map);
  }
  trim(coeffs);
  return Decomposition{s, MPoly::constant(map.ring(), 1), 0, std::move(coeffs)};
}

Decomposition decompose_localized(const ExpMap& map, const SliceRecord& s, const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "cannot decompose 0");
  if (s.lc.is_zero()) throw Error(ErrorKind::ZeroLeadingCoefficient, "local slice has lc_sigma = 0");
  if (s.deg_sigma == 0) throw Error(ErrorKind::NotASlice, s.element.to_string() + " is invariant");
  const MPoly& a = s.lc;
  PowerCache s_pow(s.element);
  PowerCache a_pow(a);

  // Loop invariant: a^e * f = Σ coeffs[i] s^i + rest.
  std::vector<MPoly> coeffs{MPoly(map.ring())};
  std::uint64_t e = 0;
  MPoly rest = f;
  while (!rest.is_zero()) {
    const SigmaProfile pr = profile(map, rest);
    if (pr.deg_sigma == 0) {
      add_at(coeffs, 0, rest);
      break;
    }
    const std::size_t k = quotient_degree(pr.deg_sigma, s.deg_sigma);
    const MPoly& ak = a_pow(k);
    for (MPoly& b : coeffs) b *= ak;
    add_at(coeffs, k, pr.lc_sigma);
    rest = ak * rest - pr.lc_sigma * s_pow(k);
    e += k;
    check_descent(pr.deg_sigma, rest, map);
  }
  trim(coeffs);

  if (e > 0 && a.is_constant()) {
    const FieldElem inv = a.constant_term().inverse().pow(e);
    for (MPoly& b : coeffs) b = b.scaled(inv);
    e = 0;
  }
  while (e > 0) {
    std::vector<MPoly> divided;
    for (const MPoly& b : coeffs) {
      auto q = exact_divide(b, a);
      if (!q) break;
      divided.push_back(std::move(*q));
    }
    if (divided.size() != coeffs.size()) break;
    coeffs = std::move(divided);
    --e;
  }
  return Decomposition{s.element, a, e, std::move(coeffs)};
}

Decomposition reduce_denominator(const ExpMap& map, const Decomposition& dec, const std::vector<MPoly>& factors) {
  for (const MPoly& p : factors) {
    if (!map.is_invariant(p)) throw Error(ErrorKind::NotInvariantFactor, p.to_string() + " is not invariant");
  }
  Decomposition out = dec;
  if (factors.empty()) {
    if (!dec.denom_base.is_constant() || dec.denom_base.is_zero()) {
      throw Error(ErrorKind::FactorizationMismatch,
                  "no factors given but lc " + dec.denom_base.to_string() + " is not a unit");
    }
    // l = 0: the unit a^n moves into the coefficients.
    const FieldElem inv = dec.denom_base.constant_term().inverse().pow(dec.exponent);
    for (MPoly& b : out.coeffs) b = b.scaled(inv);
    out.exponent = 0;
    return out;
  }
  const MPoly prod = product(map.ring(), factors);
  if (!(prod == dec.denom_base)) {
    throw Error(ErrorKind::FactorizationMismatch,
                "product of factors " + prod.to_string() + " != " + dec.denom_base.to_string());
  }
  while (out.exponent >= 1) {
    std::vector<MPoly> current = out.coeffs;
    for (std::size_t u = 0; u < factors.size(); ++u) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        auto q = exact_divide(current[i], factors[u]);
        if (!q) throw HypothesisViolation(i, u + 1);
        current[i] = std::move(*q);
      }
    }
    for (const MPoly& c : current) {
      if (!map.is_invariant(c)) {
        throw Error(ErrorKind::InvariantViolation, "quotient " + c.to_string() + " is not invariant");
      }
    }
    out.coeffs = std::move(current);
    --out.exponent;
  }
  return out;
}

HypothesisReport check_theorem_main_hypotheses(const ExpMap& map, const SliceRecord& s,
                                               const std::vector<MPoly>& factors, DegreeWindow window,
                                               const std::vector<bool>& domain_assertions) {
  if (factors.empty()) {
    if (!s.lc.is_constant() || s.lc.is_zero()) {
      throw Error(ErrorKind::FactorizationMismatch, "no factors given but lc " + s.lc.to_string() + " is not a unit");
    }
  } else {
    const MPoly prod = product(map.ring(), factors);
    if (!(prod == s.lc)) {
      throw Error(ErrorKind::FactorizationMismatch,
                  "product of factors " + prod.to_string() + " != lc " + s.lc.to_string());
    }
  }
  HypothesisReport report{true, {}, true};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const MPoly& p = factors[i];
    if (!map.is_invariant(p)) throw Error(ErrorKind::NotInvariantFactor, p.to_string() + " is not invariant");
    const bool unit = p.is_constant();
    const bool divides = exact_divide(s.lc, p).has_value();
    const bool residue = !unit && residue_is_base_field(map, p, window);
    bool domain = false;
    DomainSource source = DomainSource::Missing;
    if (p.total_degree() == 1) {
      // A/pA for linear p is again a polynomial ring over the field.
      domain = true;
      source = DomainSource::Checked;
    } else if (i < domain_assertions.size()) {
      domain = domain_assertions[i] && !unit;
      source = DomainSource::Asserted;
    }
    const bool remark = !unit && remark_check_min_slice(map, s.element, p, window);
    report.factors.push_back(FactorReport{p, true, divides, residue, domain, source, remark});
    report.pass = report.pass && report.factors.back().ok();
  }
  return report;
}

VerificationReport verify_polynomial_ring(const ExpMap& map, const MPoly& s, const std::vector<MPoly>& factors,
                                          DegreeWindow window) {
  const SliceRecord rec = make_slice_record(map, s);
  const bool is_slice = rec.lc.is_one();
  VerificationReport report;
  const FieldSpec field = map.ring()->field();
  for (const Monomial& m : monomials_up_to(map.ring()->nvars(), window.max_degree)) {
    const MPoly f = MPoly::term(map.ring(), m, FieldElem::one(field));
    MonomialVerdict verdict{m, f.to_string(), false, std::nullopt, {}};
    try {
      Decomposition dec = is_slice ? decompose_with_slice(map, s, f) : decompose_localized(map, rec, f);
      if (!is_slice && (dec.exponent > 0 || !factors.empty())) dec = reduce_denominator(map, dec, factors);
      if (dec.exponent != 0) {
        verdict.failure = "denominator exponent " + std::to_string(dec.exponent);
      } else if (!dec.round_trips(f)) {
        verdict.failure = "round-trip mismatch";
      } else if (!std::all_of(dec.coeffs.begin(), dec.coeffs.end(),
                              [&](const MPoly& b) { return map.is_invariant(b); })) {
        verdict.failure = "non-invariant coefficient";
      } else {
        verdict.pass = true;
      }
      verdict.decomposition = std::move(dec);
    } catch (const Error& err) {
      verdict.failure = err.what();
    }
    if (verdict.pass) ++report.monomials_passed;
    report.monomials.push_back(std::move(verdict));
  }

  // Independence over the window invariants, with a fixed-seed generator so
  // the report is reproducible.
  const std::vector<MPoly> invariants = invariant_basis(map, window);
  std::mt19937_64 rng(0x5eedULL);
  auto scalar = [&]() {
    if (field.is_prime_field()) return FieldElem::from_unsigned(field, rng() % field.modulus());
    return FieldElem(field, static_cast<long>(rng() % 7) - 3);
  };
  auto random_invariant = [&]() {
    MPoly a(map.ring());
    for (const MPoly& b : invariants) a += b.scaled(scalar());
    return a;
  };
  constexpr std::size_t kTrials = 20;
  for (std::size_t t = 0; t < kTrials; ++t) {
    const std::size_t top = 1 + rng() % 3;
    MPoly combo(map.ring());
    MPoly power = MPoly::constant(map.ring(), 1);
    for (std::size_t i = 0; i <= top; ++i) {
      MPoly a = random_invariant();
      if (i == top && a.is_zero()) a = MPoly::constant(map.ring(), 1);
      combo += a * power;
      power *= s;
    }
    ++report.independence_trials;
    if (!combo.is_zero() && map.apply(combo).degree() == rec.deg_sigma * top) ++report.independence_passed;
  }
  return report;
}

}  // namespace expmap
