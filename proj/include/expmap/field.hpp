#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace expmap {

// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws Error(NotPrime) unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Parses `Q` or `Fp:<prime>`.
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// The prime p; 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

std::uint64_t characteristic(const FieldSpec& spec) noexcept;

bool is_prime(std::uint64_t n) noexcept;

// Exact scalar. Rationals are kept in lowest terms with a positive
// denominator, residues in [0, p).
class FieldElem {
 public:
  explicit FieldElem(FieldSpec spec = {});
  FieldElem(FieldSpec spec, long value);
  FieldElem(FieldSpec spec, const mpz_class& value);
  /// num/den; throws DivisionByZero when den vanishes in the field.
  FieldElem(FieldSpec spec, const mpz_class& num, const mpz_class& den);

  static FieldElem zero(FieldSpec spec) { return FieldElem(spec); }
  static FieldElem one(FieldSpec spec) { return FieldElem(spec, 1L); }
  static FieldElem from_unsigned(FieldSpec spec, std::uint64_t value);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True for rationals < 0; always false in F_p.
  bool is_negative() const noexcept;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem& operator*=(const FieldElem& rhs);
  FieldElem& operator/=(const FieldElem& rhs);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;
  FieldElem abs() const;

  /// `a/b` or `a` for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  void check_same(const FieldElem& rhs) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t> value_;
};

enum class FieldOp { Add, Sub, Mul, Div };

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

}  // namespace expmap
