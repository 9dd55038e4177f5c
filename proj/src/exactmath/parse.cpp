#include "k3pencil/exactmath/parse.hpp"

#include <algorithm>
#include <cctype>

namespace k3pencil {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, AlphaSquare kind)
      : text_(text), vars_(vars), kind_(kind) {}

  MPoly run() {
    MPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly r = term();
    while (true) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  MPoly term() {
    MPoly r = factor();
    while (true) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        MPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("divisor must be a nonzero constant");
        r *= d.constant_value().inverse();
      } else {
        return r;
      }
    }
  }

  MPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    MPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rat v(std::string(text_.substr(start, pos_ - start)));
      return MPoly::constant(vars_, FieldElem(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) != vars_.end()) return MPoly::variable(vars_, name);
      if (name == "s") return MPoly::constant(vars_, FieldElem::s());
      if (name == "alpha") {
        if (kind_ == AlphaSquare::none) fail("alpha is not available in this field");
        return MPoly::constant(vars_, FieldElem::alpha(kind_));
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  AlphaSquare kind_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, AlphaSquare alpha_kind) {
  return Parser(text, vars, alpha_kind).run();
}

}  // namespace k3pencil
