#include "redalg/expr.hpp"

#include <cctype>

#include "redalg/ratfunc.hpp"

namespace redalg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::unique_ptr<Expr> run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = pos;
    return e;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> a,
                                      std::unique_ptr<Expr> b) {
    auto e = node(k, pos);
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  std::unique_ptr<Expr> expr() {
    skip();
    std::size_t p = i_;
    std::unique_ptr<Expr> e;
    if (eat('-')) {
      e = node(Expr::Kind::neg, p);
      e->lhs = term();
    } else {
      eat('+');
      e = term();
    }
    for (;;) {
      skip();
      p = i_;
      if (eat('+')) e = binary(Expr::Kind::add, p, std::move(e), term());
      else if (eat('-')) e = binary(Expr::Kind::sub, p, std::move(e), term());
      else return e;
    }
  }

  std::unique_ptr<Expr> term() {
    auto e = unary();
    for (;;) {
      skip();
      std::size_t p = i_;
      if (eat('*')) e = binary(Expr::Kind::mul, p, std::move(e), unary());
      else if (eat('/')) e = binary(Expr::Kind::div, p, std::move(e), unary());
      else return e;
    }
  }

  std::unique_ptr<Expr> unary() {
    skip();
    std::size_t p = i_;
    if (eat('-')) {
      auto e = node(Expr::Kind::neg, p);
      e->lhs = unary();
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    skip();
    std::size_t p = i_;
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t q = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (q == i_) throw ParseError("expected integer exponent", q);
    if (i_ - q > 6) throw ParseError("exponent too large", q);
    auto e = node(Expr::Kind::pow, p);
    e->exponent = std::stoi(std::string(s_.substr(q, i_ - q))) * (neg ? -1 : 1);
    e->lhs = std::move(base);
    return e;
  }

  std::unique_ptr<Expr> atom() {
    skip();
    std::size_t p = i_;
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", p);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      auto e = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = node(Expr::Kind::number, p);
      e->value = Integer(std::string(s_.substr(p, i_ - p)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::size_t d = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = node(Expr::Kind::symbol, p);
      e->letters = std::string(s_.substr(p, d - p));
      e->digits = std::string(s_.substr(d, i_ - d));
      if (e->digits.empty()) throw ParseError("symbol '" + e->letters + "' needs an index", p);
      return e;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", p);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

RatFunc eval_scalar(const Expr& e, int n) {
  switch (e.kind) {
    case Expr::Kind::number:
      return RatFunc(Rational(e.value));
    case Expr::Kind::symbol: {
      if (e.letters != "h") throw ParseError("unknown symbol '" + e.letters + e.digits + "'", e.pos);
      for (char c : e.digits) {
        if (c < '1' || c - '0' > n) throw ParseError("index out of range in 'h" + e.digits + "'", e.pos);
      }
      if (e.digits.size() == 1) return RatFunc::h(e.digits[0] - '0');
      if (e.digits.size() == 2) return RatFunc::h(e.digits[0] - '0', e.digits[1] - '0');
      throw ParseError("malformed symbol 'h" + e.digits + "'", e.pos);
    }
    case Expr::Kind::add:
      return eval_scalar(*e.lhs, n) + eval_scalar(*e.rhs, n);
    case Expr::Kind::sub:
      return eval_scalar(*e.lhs, n) - eval_scalar(*e.rhs, n);
    case Expr::Kind::mul:
      return eval_scalar(*e.lhs, n) * eval_scalar(*e.rhs, n);
    case Expr::Kind::div: {
      RatFunc d = eval_scalar(*e.rhs, n);
      if (d.is_zero()) throw ParseError("division by zero", e.pos);
      return eval_scalar(*e.lhs, n) / d;
    }
    case Expr::Kind::neg:
      return -eval_scalar(*e.lhs, n);
    case Expr::Kind::pow: {
      RatFunc b = eval_scalar(*e.lhs, n);
      if (e.exponent < 0 && b.is_zero()) throw ParseError("division by zero", e.pos);
      return b.pow(e.exponent);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) { return Parser(text).run(); }

RatFunc parse_ratfunc(const std::string& text, int n) { return eval_scalar(*parse_expression(text), n); }

}  // namespace redalg
