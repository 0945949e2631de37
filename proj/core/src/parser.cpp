#include "adjlab/parser.hpp"

#include <cctype>

namespace adjlab {

namespace {

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void advance() {
    ++col_;
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  std::string read_identifier() {
    std::string id;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        id += c;
        advance();
      } else {
        break;
      }
    }
    return id;
  }

  std::string read_integer() {
    std::string n;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n += s_[pos_];
      advance();
    }
    return n;
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), lx_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (!lx_.eof()) lx_.fail("unexpected trailing input");
    return p;
  }

private:
  Polynomial expr() {
    Polynomial acc = term();
    while (!lx_.eof()) {
      char c = lx_.peek();
      if (c == '+') {
        lx_.advance();
        acc = acc + term();
      } else if (c == '-') {
        lx_.advance();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    bool negate = false;
    while (lx_.peek() == '-') {
      lx_.advance();
      negate = !negate;
    }
    Polynomial acc = factor();
    while (lx_.peek() == '*') {
      lx_.advance();
      acc = acc * factor();
    }
    return negate ? -acc : acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lx_.peek() == '^') {
      lx_.advance();
      char c = lx_.peek();
      if (!std::isdigit(static_cast<unsigned char>(c)))
        lx_.fail("expected a non-negative integer exponent");
      std::string n = lx_.read_integer();
      unsigned long e = 0;
      try {
        e = std::stoul(n);
      } catch (...) {
        lx_.fail("exponent out of range");
      }
      if (e > 1u << 20) lx_.fail("exponent out of range");
      b = b.pow(static_cast<std::uint32_t>(e));
    }
    return b;
  }

  Polynomial base() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.advance();
      Polynomial p = expr();
      if (lx_.peek() != ')') lx_.fail("expected ')'");
      lx_.advance();
      check_no_juxtaposition();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n = lx_.read_integer();
      check_no_juxtaposition();
      Integer z(n);
      Rational q(z);
      return Polynomial::constant(ring_, ring_->field().from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t line = lx_.line(), col = lx_.col();
      std::string id = lx_.read_identifier();
      auto idx = ring_->var_index(id);
      if (!idx) throw ParseError("unknown variable '" + id + "'", line, col);
      check_no_juxtaposition();
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') lx_.fail("unexpected end of input");
    lx_.fail(std::string("unexpected character '") + c + "'");
  }

  void check_no_juxtaposition() {
    char c = lx_.peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
      lx_.fail("implicit multiplication by juxtaposition is not allowed; use '*'");
  }

  RingPtr ring_;
  Lexer lx_;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(ring, text).parse();
}

}  // namespace adjlab
