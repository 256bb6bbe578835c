#include "rhomax/parser.hpp"

#include <cctype>

namespace rhomax::sym {

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " at offset " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, TowerPtr tower) : s_(text), tower_(std::move(tower)) {}

  RationalFunction parse() {
    auto r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected integer exponent", pos_);
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (neg && base.is_zero()) throw ParseError("negative power of zero", start);
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(MPoly(tower_, BigRational(BigInt(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (tower_->has_symbol(name)) return RationalFunction(MPoly(tower_->symbol(name)));
      return RationalFunction(MPoly::variable(tower_, name));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  const std::string& s_;
  TowerPtr tower_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text, const TowerPtr& tower) {
  return Parser(text, tower).parse();
}

MPoly parse_polynomial(const std::string& text, const TowerPtr& tower) {
  auto r = parse_rational_function(text, tower);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial, got a rational function: " + text, 0);
  return r.as_polynomial();
}

}  // namespace rhomax::sym
