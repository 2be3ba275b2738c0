#include "recgeo/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "recgeo/errors.hpp"

namespace recgeo {

namespace {

constexpr std::size_t kMaxDepth = 200;
constexpr std::size_t kMaxDegree = 4096;

const std::vector<std::string> kTermStart = {"'-'", "number", "'x'", "'('", "'ff('", "'C('"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"}, "unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    throw SyntaxError(pos_, std::move(expected), detail);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Consumes '-' or U+2212.
  bool accept_minus() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"}, "unexpected input");
  }

  void check_degree(std::size_t degree) const {
    if (degree > kMaxDegree) fail({}, "polynomial degree exceeds " + std::to_string(kMaxDegree));
  }

  static std::size_t degree_of(const Poly& p) { return p.degree().value_or(0); }

  Poly expr() {
    if (++depth_ > kMaxDepth) fail({}, "expression nested too deeply");
    Poly acc = signed_term();
    while (true) {
      if (accept('+')) {
        acc = acc + signed_term();
      } else if (accept_minus()) {
        acc = acc - signed_term();
      } else {
        break;
      }
    }
    --depth_;
    return acc;
  }

  Poly signed_term() {
    if (accept_minus()) return -term();
    return term();
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) {
      Poly rhs = factor();
      if (!acc.is_zero() && !rhs.is_zero()) check_degree(degree_of(acc) + degree_of(rhs));
      acc = acc * rhs;
    }
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      const std::size_t k = small_natural();
      check_degree(degree_of(b) * k);
      b = b.pow(k);
    }
    return b;
  }

  Poly base() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(rational());
    if (c == 'x') {
      ++pos_;
      return Poly::x();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_, 2) == "ff") {
      pos_ += 2;
      return falling(false);
    }
    if (c == 'C') {
      ++pos_;
      return falling(true);
    }
    if (at_end()) fail(kTermStart, "unexpected end of input");
    fail(kTermStart, "unexpected character");
  }

  // After 'ff' or 'C': '(' expr ',' natural ')'.
  Poly falling(bool binomial) {
    expect('(');
    Poly arg = expr();
    expect(',');
    const std::size_t k = small_natural();
    expect(')');
    check_degree(degree_of(arg) * k);
    Poly out = Poly::constant(1);
    for (std::size_t j = 0; j < k; ++j) out = out * (arg - Poly::constant(static_cast<long>(j)));
    if (binomial) out = out.scale(Rational(Integer(1), factorial(k)));
    return out;
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail({"number"}, "expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::size_t small_natural() {
    const std::size_t start = (skip_ws(), pos_);
    const Integer v = digits();
    if (v > kMaxExponent) {
      pos_ = start;
      fail({}, "natural number exceeds " + std::to_string(kMaxExponent));
    }
    return v.get_ui();
  }

  Rational rational() {
    const Integer num = digits();
    if (!accept('/')) return Rational(num);
    skip_ws();
    const std::size_t den_pos = pos_;
    const Integer den = digits();
    if (den == 0) throw DivisionByZero(den_pos);
    return make_rational(num, den);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

std::string magnitude(const Rational& c) { return to_string(Rational(abs(c))); }

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += magnitude(c);
      continue;
    }
    if (abs(c) != 1) out += magnitude(c) + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace recgeo
