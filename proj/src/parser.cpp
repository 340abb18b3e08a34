#include <cctype>
#include <sstream>

#include "smoothsum/ratfun.hpp"

namespace smoothsum {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFunction run() {
    RationalFunction value = expr();
    skip_ws();
    if (pos_ != s_.size()) err("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void err(const std::string& msg) const {
    fail(Err::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction value = term();
    while (true) {
      if (eat('+')) {
        value = rf_add(value, term());
      } else if (eat('-')) {
        value = rf_sub(value, term());
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = factor();
    while (true) {
      if (eat('*')) {
        value = rf_mul(value, factor());
      } else if (eat('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail(Err::ZeroDenominator, "division by zero");
        value = rf_div(value, d);
      } else {
        return value;
      }
    }
  }

  RationalFunction factor() {
    int sign = 1;
    while (true) {
      if (eat('-')) {
        sign = -sign;
      } else if (eat('+')) {
      } else {
        break;
      }
    }
    RationalFunction value = atom();
    if (eat('^')) value = rf_pow(value, exponent());
    return sign < 0 ? rf_neg(value) : value;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= s_.size()) err("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction value = expr();
      if (!eat(')')) err("expected ')'");
      return value;
    }
    if (c == 'x') {
      ++pos_;
      return RationalFunction{{Int(0), Int(1)}, {Int(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ratfun_from_int(integer());
    err("expected a number, 'x' or '('");
  }

  i64 exponent() {
    skip_ws();
    bool paren = eat('(');
    int sign = 1;
    while (true) {
      if (eat('-')) {
        sign = -sign;
      } else if (eat('+')) {
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      err("expected an integer exponent");
    Int e = integer();
    if (e > 64) fail(Err::Overflow, "exponent too large");
    if (paren && !eat(')')) err("expected ')'");
    return sign * static_cast<i64>(e);
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    Int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) err("expected digits");
    return v;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

void append_poly(std::ostringstream& os, const IPoly& p) {
  if (p.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (size_t i = p.size(); i-- > 0;) {
    const Int& c = p[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
}

}  // namespace

RationalFunction parse_ratfun(const std::string& expr) { return Parser(expr).run(); }

std::string to_string(const RationalFunction& h) {
  std::ostringstream os;
  if (degree(h.den) == 0 && h.den[0] == 1) {
    append_poly(os, h.num);
  } else {
    os << "(";
    append_poly(os, h.num);
    os << ")/(";
    append_poly(os, h.den);
    os << ")";
  }
  return os.str();
}

}  // namespace smoothsum
