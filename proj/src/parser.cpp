#include <cctype>

#include "polynomial.hpp"

namespace gobelin {

namespace {

class Parser {
public:
  Parser(const std::string& text, const Context& ctx, const FieldSpec& f)
      : s_(text), ctx_(ctx), field_(f) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Polynomial p(ctx_, field_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (next() == '-');
    p += parse_term(negate);
    skip_ws();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', got '") + op + "'");
      next();
      p += parse_term(op == '-');
      skip_ws();
    }
    return p;
  }

private:
  const std::string& s_;
  const Context& ctx_;
  FieldSpec field_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw_input("SyntaxError",
                "polynomial syntax error at position " + std::to_string(i_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return s_[i_];
  }
  char next() {
    skip_ws();
    return s_[i_++];
  }

  Polynomial parse_term(bool negate) {
    Polynomial t = parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      next();
      t = t * parse_factor();
      skip_ws();
    }
    return negate ? -t : t;
  }

  Polynomial parse_factor() {
    if (at_end()) fail("expected a factor");
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_coefficient();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  Polynomial parse_coefficient() {
    bool neg = false;
    if (peek() == '-') {
      next();
      neg = true;
      skip_ws();
    }
    mpz_class num(read_digits());
    if (neg) num = -num;
    mpz_class den(1);
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      skip_ws();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
        fail("malformed rational coefficient: expected an unsigned denominator");
      den = mpz_class(read_digits());
      if (den == 0) fail("malformed rational coefficient: zero denominator");
    }
    return Polynomial::constant(ctx_, Scalar::of_ratio(num, den, field_));
  }

  Polynomial parse_variable() {
    std::size_t start = i_;
    std::string id;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      id += s_[i_++];
    auto idx = ctx_.index(id);
    if (!idx)
      throw_input("UnknownVariable", "unknown variable '" + id + "' at position " +
                                         std::to_string(start + 1));
    std::uint32_t e = 1;
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      skip_ws();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
        fail("expected an unsigned exponent after '^'");
      mpz_class ez(read_digits());
      if (ez > 100000) fail("exponent too large");
      e = static_cast<std::uint32_t>(ez.get_ui());
    }
    Monomial m(ctx_.size());
    m.exp(*idx) = e;
    return Polynomial::term(ctx_, m, Scalar::one(field_));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Context& ctx, const FieldSpec& f) {
  return Parser(text, ctx, f).parse();
}

}  // namespace gobelin
