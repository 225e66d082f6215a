#include "expmap/field.hpp"

#include <array>
#include <charconv>

#include "expmap/error.hpp"

namespace expmap {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ReservedVariable: return "ReservedVariable";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::InvariantElement: return "InvariantElement";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::NotASlice: return "NotASlice";
    case ErrorKind::DegreeNotDivisible: return "DegreeNotDivisible";
    case ErrorKind::NoNonInvariantInWindow: return "NoNonInvariantInWindow";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::NotInvariantFactor: return "NotInvariantFactor";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InstanceFormat: return "InstanceFormat";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

u64 reduce(const mpz_class& v, u64 p) {
  // mpz_fdiv_ui returns the nonnegative remainder.
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for every n < 2^64.
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view kPrefix = "Fp:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view digits = text.substr(kPrefix.size());
    u64 p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw Error(ErrorKind::BadArgument,
              "field must be \"Q\" or \"Fp:<prime>\", got \"" + std::string(text) + "\"");
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "Fp:" + std::to_string(p_) : std::string("Q");
}

std::uint64_t characteristic(const FieldSpec& spec) noexcept { return spec.characteristic(); }

FieldElem::FieldElem(FieldSpec spec) : spec_(spec) {
  if (spec_.is_prime_field()) {
    value_ = u64{0};
  }
}

FieldElem::FieldElem(FieldSpec spec, long value) : FieldElem(spec, mpz_class(value)) {}

FieldElem::FieldElem(FieldSpec spec, const mpz_class& value) : spec_(spec) {
  if (spec_.is_prime_field()) {
    value_ = reduce(value, spec_.modulus());
  } else {
    value_ = mpq_class(value);
  }
}

FieldElem::FieldElem(FieldSpec spec, const mpz_class& num, const mpz_class& den) : spec_(spec) {
  if (spec_.is_prime_field()) {
    const u64 p = spec_.modulus();
    const u64 d = reduce(den, p);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    value_ = mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p);
  } else {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  }
}

FieldElem FieldElem::from_unsigned(FieldSpec spec, std::uint64_t value) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return FieldElem(spec, mpz_class(static_cast<unsigned long>(value)));
}

bool FieldElem::is_zero() const noexcept {
  if (spec_.is_prime_field()) return std::get<u64>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElem::is_one() const noexcept {
  if (spec_.is_prime_field()) return std::get<u64>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool FieldElem::is_negative() const noexcept {
  return !spec_.is_prime_field() && sgn(std::get<mpq_class>(value_)) < 0;
}

void FieldElem::check_same(const FieldElem& rhs) const {
  if (!(spec_ == rhs.spec_)) {
    throw Error(ErrorKind::MixedFields, spec_.to_string() + " vs " + rhs.spec_.to_string());
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  if (spec_.is_prime_field()) {
    u64& v = std::get<u64>(r.value_);
    if (v != 0) v = spec_.modulus() - v;
  } else {
    mpq_class& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  check_same(rhs);
  if (spec_.is_prime_field()) {
    const u64 p = spec_.modulus();
    u64& v = std::get<u64>(value_);
    const u64 w = std::get<u64>(rhs.value_);
    v = (v >= p - w) ? v - (p - w) : v + w;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  check_same(rhs);
  return *this += -rhs;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
  check_same(rhs);
  if (spec_.is_prime_field()) {
    u64& v = std::get<u64>(value_);
    v = mul_mod(v, std::get<u64>(rhs.value_), spec_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElem r(*this);
  if (spec_.is_prime_field()) {
    const u64 p = spec_.modulus();
    r.value_ = pow_mod(std::get<u64>(value_), p - 2, p);
  } else {
    mpq_class& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  }
  return r;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = one(spec_);
  FieldElem base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

FieldElem FieldElem::abs() const { return is_negative() ? -*this : *this; }

std::string FieldElem::to_string() const {
  if (spec_.is_prime_field()) return std::to_string(std::get<u64>(value_));
  return std::get<mpq_class>(value_).get_str();
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(ErrorKind::BadArgument, "unknown field operation");
}

}  // namespace expmap
