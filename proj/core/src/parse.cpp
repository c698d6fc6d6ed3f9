#include <cctype>

#include "prin/poly.hpp"

namespace prin {

namespace {

// Recursive descent over:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' nat)*
//   primary:= literal | variable | '(' expr ')'
class Parser {
public:
  Parser(const std::string& text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    while (peek() == '^') {
      ++pos_;
      base = base.pow(natural());
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    throw parse_error("expected a literal, variable or '('", pos_);
  }

  unsigned long natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw parse_error("expected an exponent", pos_);
    return std::stoul(text_.substr(start, pos_ - start));
  }

  Polynomial literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == dstart) throw parse_error("expected a denominator", pos_);
      std::string den = text_.substr(dstart, pos_ - dstart);
      if (Integer(den) == 0) throw parse_error("zero denominator", dstart);
      return Polynomial::constant(ring_, rational_from_string(num + "/" + den));
    }
    return Polynomial::constant(ring_, rational_from_string(num));
  }

  Polynomial variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    std::size_t idx = ring_->index_of(name);
    if (idx == Ring::npos)
      throw parse_error("unknown variable '" + name + "'", start);
    return Polynomial::variable(ring_, idx);
  }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

} // namespace prin
