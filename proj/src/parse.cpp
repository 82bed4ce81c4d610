#include "instanton/parse.hpp"

#include <cctype>
#include <string>

#include "instanton/errors.hpp"

namespace instanton {
namespace {

class Parser {
 public:
  Parser(std::string_view text, ParseContext context) : text_(text), context_(context) {}

  PolyExpr parse() {
    PolyExpr e = expr(true);
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  PolyExpr expr(bool top_level) {
    PolyExpr sum;
    sum.kind = PolyExpr::Kind::kSum;
    sum.position = (skip_space(), pos_);
    int sign = 1;
    if (top_level && peek() == '-') {
      sign = -1;
      ++pos_;
    }
    sum.children.push_back(term());
    sum.signs.push_back(sign);
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      sum.children.push_back(term());
      sum.signs.push_back(c == '+' ? 1 : -1);
    }
    return sum;
  }

  PolyExpr term() {
    PolyExpr prod;
    prod.kind = PolyExpr::Kind::kProduct;
    prod.position = (skip_space(), pos_);
    prod.children.push_back(factor());
    while (peek() == '*') {
      ++pos_;
      prod.children.push_back(factor());
    }
    return prod;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  PolyExpr factor() {
    const char c = peek();
    PolyExpr f;
    f.position = pos_;
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_start;
          fail("zero denominator");
        }
        num += "/" + den;
      }
      f.kind = PolyExpr::Kind::kNumber;
      f.value = parse_rat(num);
      return f;
    }
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr(false);
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      check_variable(c);
      ++pos_;
      f.kind = PolyExpr::Kind::kVariable;
      f.variable = c;
      if (peek() == '^') {
        ++pos_;
        f.exponent = exponent(c);
      }
      return f;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void check_variable(char c) const {
    const bool curve = context_ == ParseContext::kCurve;
    const bool ok = curve ? (c == 'x' || c == 'y') : (c == 'z' || c == 'u');
    if (!ok) {
      fail("variable '" + std::string(1, c) + "' not allowed in " + (curve ? "curve" : "bundle") +
           " context");
    }
  }

  int exponent(char variable) {
    const char c = peek();
    const std::size_t at = pos_;
    bool negative = false;
    std::string num;
    if (c == '(') {
      ++pos_;
      if (peek() != '-') fail("expected '-' in parenthesized exponent");
      ++pos_;
      skip_space();
      num = digits();
      if (num.empty()) fail("expected integer exponent");
      expect(')');
      negative = true;
    } else {
      num = digits();
      if (num.empty()) fail("expected integer exponent");
    }
    if (num.size() > 6) throw ParseError(at, "exponent too large");
    const int value = std::stoi(num);
    if (negative && value != 0 && variable != 'z') {
      throw ParseError(at, "negative exponent on " + std::string(1, variable));
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  ParseContext context_;
  std::size_t pos_ = 0;
};

template <class Poly, class Variable>
Poly evaluate(const PolyExpr& e, Variable variable) {
  switch (e.kind) {
    case PolyExpr::Kind::kNumber:
      return variable('1', 0).scaled(e.value);
    case PolyExpr::Kind::kVariable:
      return variable(e.variable, e.exponent);
    case PolyExpr::Kind::kSum: {
      Poly out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Poly child = evaluate<Poly>(e.children[i], variable);
        if (e.signs[i] < 0) out -= child;
        else out += child;
      }
      return out;
    }
    case PolyExpr::Kind::kProduct: {
      Poly out = variable('1', 0);
      for (const auto& child : e.children) out = out * evaluate<Poly>(child, variable);
      return out;
    }
  }
  throw std::logic_error("bad expression kind");
}

}  // namespace

PolyExpr parse_polynomial(std::string_view text, ParseContext context) {
  return Parser(text, context).parse();
}

PlanePoly to_plane_poly(const PolyExpr& expr) {
  return evaluate<PlanePoly>(expr, [](char v, int k) {
    if (v == 'x') return PlanePoly::monomial(Rat(1), k, 0);
    if (v == 'y') return PlanePoly::monomial(Rat(1), 0, k);
    if (v == '1') return PlanePoly::constant(Rat(1));
    throw ValidationError("variable '" + std::string(1, v) + "' is not a curve variable");
  });
}

LaurentZU to_laurent(const PolyExpr& expr) {
  return evaluate<LaurentZU>(expr, [](char v, int k) {
    if (v == 'z') return LaurentZU::monomial(Rat(1), k, 0);
    if (v == 'u') return LaurentZU::monomial(Rat(1), 0, k);
    if (v == '1') return LaurentZU::monomial(Rat(1), 0, 0);
    throw ValidationError("variable '" + std::string(1, v) + "' is not a bundle variable");
  });
}

PlanePoly parse_curve(std::string_view text) {
  return to_plane_poly(parse_polynomial(text, ParseContext::kCurve));
}

LaurentZU parse_extension(std::string_view text) {
  return to_laurent(parse_polynomial(text, ParseContext::kBundle));
}

}  // namespace instanton
