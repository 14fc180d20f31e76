#include "pcurv/parse.hpp"

#include <cctype>
#include <limits>

#include "pcurv/error.hpp"

namespace pcurv {
namespace {

template <class Op>
class Parser {
 public:
  Parser(const std::string& text, const Field& f, char var) : s_(text), f_(f), var_(var) {}

  Op parse() {
    Op op = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return op;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Op constant(u64 c) const { return Op::term(Poly::constant(f_, c), 0); }

  Op expr() {
    skip();
    Op acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Op term() {
    Op acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  Op unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Op power() {
    skip();
    const std::size_t start = pos_;
    const bool is_d = pos_ < s_.size() && s_[pos_] == 'd';
    Op base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    const long e = exponent();
    if (neg) {
      if (!is_d) {
        pos_ = start;
        fail("negative exponent on something other than d");
      }
      return Op::term(Poly::constant(f_, 1), -e);
    }
    if (is_d) return Op::term(Poly::constant(f_, 1), e);
    Op acc = constant(1);
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  long exponent() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an exponent");
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (e > (std::numeric_limits<int>::max() - 9) / 10) fail("exponent too large");
      e = e * 10 + (s_[pos_++] - '0');
    }
    return e;
  }

  Op atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Op inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      u64 v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = f_.add(f_.mul(v, 10 % f_.p()), static_cast<u64>(s_[pos_++] - '0') % f_.p());
      return constant(v);
    }
    if (c == 'd') {
      ++pos_;
      return Op::term(Poly::constant(f_, 1), 1);
    }
    if (c == var_) {
      ++pos_;
      return Op::term(Poly::variable(f_), 0);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable '" + std::string(1, c) + "'");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  Field f_;
  char var_;
  std::size_t pos_ = 0;
};

template <class Op>
std::string print(const Op& op, const std::string& var) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second, var) + ")";
    if (it->first == 1)
      out += "*d";
    else if (it->first != 0)
      out += "*d^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace

OpXD parse_x_operator(const std::string& text, const Field& f) { return Parser<OpXD>(text, f, 'x').parse(); }

OpThetaD parse_theta_operator(const std::string& text, const Field& f) {
  return Parser<OpThetaD>(text, f, 't').parse();
}

std::string to_string(const OpXD& op) { return print(op, "x"); }
std::string to_string(const OpThetaD& op) { return print(op, "t"); }

}  // namespace pcurv
