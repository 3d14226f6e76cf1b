#include <cctype>
#include <string>

#include "kummerweb/errors.hpp"
#include "kummerweb/ratfunc.hpp"

namespace kummerweb {

namespace {

// Recursive-descent parser for the grammar in docs/grammar.md:
//
//   expr    = term   { ("+" | "-") term }
//   term    = factor { ("*" | "/") factor }
//   factor  = { "+" | "-" } base [ "^" natural ]
//   base    = "x" | "y" | natural | "(" expr ")"
//   natural = digit { digit }
//
// "^" applies to the base only, so -x^2 means -(x^2).
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        const RationalFunction d = factor();
        if (d.is_zero()) {
          throw SyntaxError("division by a zero expression", at);
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalFunction factor() {
    bool negate = false;
    for (;;) {
      if (eat('-')) {
        negate = !negate;
      } else if (eat('+')) {
        // no-op
      } else {
        break;
      }
    }
    RationalFunction v = base();
    if (eat('^')) {
      v = v.pow(natural());
    }
    return negate ? -v : v;
  }

  RationalFunction base() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return RationalFunction::variable_x();
    }
    if (c == 'y') {
      ++pos_;
      return RationalFunction::variable_y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction(BigRational(integer_literal()));
    }
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class integer_literal() {
    skip_space();
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    if (digits.empty()) fail("expected integer");
    return mpz_class(digits);
  }

  unsigned natural() {
    const std::size_t at = pos_;
    const mpz_class n = integer_literal();
    if (!n.fits_uint_p()) throw SyntaxError("exponent too large", at);
    return static_cast<unsigned>(n.get_ui());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

}  // namespace kummerweb
