#include <cctype>

#include "mhp/ratfun.hpp"

namespace mhp {
namespace {

class Parser {
 public:
  Parser(std::string text, const VarList& vars) : text_(normalize(std::move(text))), vars_(vars) {}

  RatFun run() {
    RatFun r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  static std::string normalize(std::string s) {
    const std::string minus = "\xE2\x88\x92";  // U+2212
    for (std::size_t p; (p = s.find(minus)) != std::string::npos;) s.replace(p, minus.size(), "-");
    return s;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("cannot parse '" + text_ + "' at position " + std::to_string(pos_) + ": " +
                     what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int peek() {
    skip_space();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  bool starts_atom() {
    int c = peek();
    return c == '(' || std::isdigit(c) || std::isalpha(c);
  }

  RatFun expr() {
    RatFun r = term();
    while (true) {
      int c = peek();
      if (c == '+') {
        ++pos_;
        r += term();
      } else if (c == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFun term() {
    RatFun r = unary();
    while (true) {
      int c = peek();
      if (c == '*') {
        ++pos_;
        r *= unary();
      } else if (c == '/') {
        ++pos_;
        RatFun d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else if (starts_atom()) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RatFun unary() {
    int c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(text_.substr(start, pos_ - start));
    if (negative && base.is_zero()) fail("division by zero");
    return base.pow(negative ? -e : e);
  }

  RatFun atom() {
    int c = peek();
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFun::constant(vars_, Rational(Integer(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (vars_.contains(name)) return RatFun::variable(vars_, name);
      // Juxtaposed single-letter variables, e.g. "zw".
      RatFun r = RatFun::constant(vars_, 1);
      for (char ch : name) {
        std::string v(1, ch);
        if (!vars_.contains(v)) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        r *= RatFun::variable(vars_, v);
      }
      return r;
    }
    fail(c < 0 ? "unexpected end of input" : "unexpected character");
  }

  std::string text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(const std::string& text, const VarList& vars) {
  return Parser(text, vars).run();
}

MultiPoly parse_poly(const std::string& text, const VarList& vars) {
  RatFun r = parse_ratfun(text, vars);
  auto p = r.as_polynomial();
  if (!p) throw UsageError("'" + text + "' is not a polynomial");
  return *p;
}

}  // namespace mhp
