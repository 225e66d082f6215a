#include "expmap/parse.hpp"

#include <cctype>

#include "expmap/error.hpp"

namespace expmap {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, bool allow_x)
      : text_(text), ring_(ring), allow_x_(allow_x) {}

  SigmaImage parse() {
    SigmaImage value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(ErrorKind::SyntaxError, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  SigmaImage constant(const FieldElem& c) const { return SigmaImage(MPoly::constant(ring_, c)); }

  SigmaImage expr() {
    skip_space();
    const bool negate = accept('-');
    SigmaImage value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  SigmaImage term() {
    SigmaImage value = factor();
    while (accept('*')) value = value * factor();
    return value;
  }

  SigmaImage factor() {
    SigmaImage value = base();
    if (accept('^')) {
      if (!peek_digit()) fail("expected a nonnegative integer exponent");
      const std::size_t at = pos_;
      const mpz_class e = integer();
      if (!e.fits_ulong_p()) {
        throw SyntaxError(ErrorKind::SyntaxError, at, "exponent too large");
      }
      value = value.pow(e.get_ui());
    }
    return value;
  }

  SigmaImage base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class num = integer();
      if (accept('/')) {
        const std::size_t at = pos_;
        const mpz_class den = integer();
        if (den == 0) throw SyntaxError(ErrorKind::SyntaxError, at, "zero denominator");
        const FieldSpec f = ring_->field();
        if (f.is_prime_field() && mpz_divisible_ui_p(den.get_mpz_t(), f.modulus())) {
          throw SyntaxError(ErrorKind::SyntaxError, at, "denominator vanishes in " + f.to_string());
        }
        return constant(FieldElem(f, num, den));
      }
      return constant(FieldElem(ring_->field(), num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x" && allow_x_) {
        return SigmaImage({MPoly(ring_), MPoly::constant(ring_, 1)});
      }
      if (auto idx = ring_->index_of(name)) return SigmaImage(MPoly::variable(ring_, *idx));
      throw SyntaxError(ErrorKind::UnknownVariable, start, "unknown variable '" + std::string(name) + "'");
    }
    if (accept('(')) {
      SigmaImage inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const RingPtr& ring) {
  SigmaImage value = Parser(text, ring, false).parse();
  return value.at_zero();
}

SigmaImage parse_sigma_image(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, true).parse();
}

}  // namespace expmap
