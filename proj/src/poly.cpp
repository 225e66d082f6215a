#include "expmap/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "expmap/error.hpp"

namespace expmap {

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const std::uint64_t da = total_degree(a);
  const std::uint64_t db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_compare(a, b) > 0;
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::ExponentOverflow, "exponent exceeds 32 bits");
    }
    r[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

// Quotient a / b when b divides a componentwise.
std::optional<Monomial> divide_monomials(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    r[i] = a[i] - b[i];
  }
  return r;
}

std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string power_string(const char* name, std::uint32_t e) {
  if (e == 0) return {};
  std::string s = name;
  if (e > 1) s += '^' + std::to_string(e);
  return s;
}

// Appends `coeff*rest` to out with a leading sign handled like the MPoly
// printer: single-term negative coefficients become " - ".
void append_scaled(std::string& out, const MPoly& coeff, const std::string& rest) {
  const bool single = coeff.num_terms() == 1;
  const bool negative = single && coeff.leading_coeff().is_negative();
  const MPoly shown = negative ? -coeff : coeff;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (rest.empty()) {
    out += shown.to_string();
  } else if (shown.is_one()) {
    out += rest;
  } else if (single) {
    out += shown.to_string() + '*' + rest;
  } else {
    out += '(' + shown.to_string() + ")*" + rest;
  }
}

}  // namespace

Ring::Ring(FieldSpec field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const std::string& v = vars_[i];
    if (v == "x" || v == "y") {
      throw Error(ErrorKind::ReservedVariable, "'" + v + "' is reserved for A[x, y]");
    }
    if (!is_identifier(v)) throw Error(ErrorKind::BadArgument, "bad variable name '" + v + "'");
    if (std::find(vars_.begin(), vars_.begin() + static_cast<std::ptrdiff_t>(i), v) !=
        vars_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw Error(ErrorKind::BadArgument, "duplicate variable '" + v + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars) {
  return std::make_shared<const Ring>(field, std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(RingPtr ring) : ring_(std::move(ring)) {}

MPoly MPoly::constant(RingPtr ring, const FieldElem& c) {
  MPoly p(ring);
  p.add_term(Monomial(ring->nvars(), 0), c);
  return p;
}

MPoly MPoly::constant(RingPtr ring, long c) {
  const FieldSpec f = ring->field();
  return constant(std::move(ring), FieldElem(f, c));
}

MPoly MPoly::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars(), 0);
  m.at(index) = 1;
  const FieldSpec f = ring->field();
  return term(std::move(ring), std::move(m), FieldElem::one(f));
}

MPoly MPoly::term(RingPtr ring, Monomial m, const FieldElem& c) {
  MPoly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && expmap::total_degree(terms_.begin()->first) == 0);
}

bool MPoly::is_one() const noexcept {
  return terms_.size() == 1 && expmap::total_degree(terms_.begin()->first) == 0 &&
         terms_.begin()->second.is_one();
}

std::uint64_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : expmap::total_degree(terms_.begin()->first);
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroElement, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const FieldElem& MPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroElement, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

FieldElem MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem::zero(field()) : it->second;
}

FieldElem MPoly::constant_term() const { return coeff(Monomial(ring_->nvars(), 0)); }

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

MPoly MPoly::scaled(const FieldElem& c) const {
  MPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * c);
  return r;
}

MPoly MPoly::pow(std::uint64_t e) const {
  MPoly result = constant(ring_, 1);
  MPoly base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

FieldElem MPoly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != ring_->nvars()) {
    throw Error(ErrorKind::BadArgument, "evaluation point has wrong dimension");
  }
  FieldElem sum = FieldElem::zero(field());
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t *= point[i].pow(m[i]);
    }
    sum += t;
  }
  return sum;
}

void MPoly::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_ring(const MPoly& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  check_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  check_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_ring(b);
  MPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

bool operator==(const MPoly& a, const MPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.is_negative();
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(*ring_, m);
    const FieldElem shown = c.abs();
    if (mono.empty()) {
      out += shown.to_string();
    } else if (shown.is_one()) {
      out += mono;
    } else {
      out += shown.to_string() + '*' + mono;
    }
  }
  return out;
}

MPoly poly_arith(const MPoly& f, const MPoly& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  throw Error(ErrorKind::BadArgument, "unknown polynomial operation");
}

std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const Monomial& lm = g.leading_monomial();
  const FieldElem lc_inv = g.leading_coeff().inverse();
  MPoly remainder = f;
  MPoly quotient(f.ring());
  // If g | r then LT(g) | LT(r); a non-divisible leading term settles it.
  while (!remainder.is_zero()) {
    auto qm = divide_monomials(remainder.leading_monomial(), lm);
    if (!qm) return std::nullopt;
    const MPoly step = MPoly::term(f.ring(), *qm, remainder.leading_coeff() * lc_inv);
    quotient += step;
    remainder -= step * g;
  }
  return quotient;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  Monomial current(nvars, 0);
  // Enumerate exponent vectors with sum <= max_degree recursively.
  auto recurse = [&](auto&& self, std::size_t var, std::uint32_t budget) -> void {
    if (var == nvars) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
      current[var] = e;
      self(self, var + 1, budget - e);
    }
    current[var] = 0;
  };
  recurse(recurse, 0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grlex_compare(a, b) < 0;
  });
  return out;
}

// ---------------------------------------------------------------------------
// SigmaImage

SigmaImage::SigmaImage(MPoly constant) { coeffs_.push_back(std::move(constant)); }

SigmaImage::SigmaImage(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::BadArgument, "image needs at least one coefficient");
  for (const MPoly& c : coeffs_) {
    if (!same_ring(c.ring(), coeffs_.front().ring())) {
      throw Error(ErrorKind::RingMismatch, "image coefficients live in different rings");
    }
  }
  trim();
}

void SigmaImage::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MPoly SigmaImage::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : MPoly(ring());
}

SigmaImage SigmaImage::operator-() const {
  SigmaImage r(*this);
  for (MPoly& c : r.coeffs_) c = -c;
  return r;
}

SigmaImage& SigmaImage::operator+=(const SigmaImage& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), MPoly(ring()));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

SigmaImage& SigmaImage::operator-=(const SigmaImage& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), MPoly(ring()));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

SigmaImage operator*(const SigmaImage& a, const SigmaImage& b) {
  std::vector<MPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1, MPoly(a.ring()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return SigmaImage(std::move(out));
}

SigmaImage SigmaImage::scaled(const MPoly& c) const {
  std::vector<MPoly> out;
  out.reserve(coeffs_.size());
  for (const MPoly& a : coeffs_) out.push_back(a * c);
  return SigmaImage(std::move(out));
}

SigmaImage SigmaImage::pow(std::uint64_t e) const {
  SigmaImage result(MPoly::constant(ring(), 1));
  SigmaImage base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string SigmaImage::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    append_scaled(out, coeffs_[i], power_string("x", static_cast<std::uint32_t>(i)));
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// BiPoly

MPoly BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? MPoly(ring_) : it->second;
}

void BiPoly::add_term(std::uint32_t i, std::uint32_t j, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

std::string BiPoly::to_string() const {
  std::vector<Key> keys;
  for (const auto& entry : terms_) keys.push_back(entry.first);
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    const auto da = a.first + a.second;
    const auto db = b.first + b.second;
    return da != db ? da > db : a.first > b.first;
  });
  std::string out;
  for (const Key& k : keys) {
    std::string rest = power_string("x", k.first);
    const std::string ys = power_string("y", k.second);
    if (!ys.empty()) rest += (rest.empty() ? "" : "*") + ys;
    append_scaled(out, terms_.at(k), rest);
  }
  return out.empty() ? "0" : out;
}

BiPoly substitute_x_plus_y(const SigmaImage& img) {
  BiPoly out(img.ring());
  const FieldSpec field = img.ring()->field();
  for (std::size_t i = 0; i < img.coeffs().size(); ++i) {
    const MPoly& a = img.coeffs()[i];
    if (a.is_zero()) continue;
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      // binom = C(i, k)
      const FieldElem c(field, binom);
      if (!c.is_zero()) {
        out.add_term(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(i - k), a.scaled(c));
      }
      binom = binom * static_cast<unsigned long>(i - k) / static_cast<unsigned long>(k + 1);
    }
  }
  return out;
}

BiPoly in_x(const SigmaImage& img) {
  BiPoly out(img.ring());
  for (std::size_t i = 0; i < img.coeffs().size(); ++i) {
    out.add_term(static_cast<std::uint32_t>(i), 0, img.coeffs()[i]);
  }
  return out;
}

BiPoly in_y(const SigmaImage& img) {
  BiPoly out(img.ring());
  for (std::size_t i = 0; i < img.coeffs().size(); ++i) {
    out.add_term(0, static_cast<std::uint32_t>(i), img.coeffs()[i]);
  }
  return out;
}

}  // namespace expmap
