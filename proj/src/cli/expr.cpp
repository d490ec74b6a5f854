#include "cli/expr.hpp"

#include <cctype>
#include <optional>

namespace spcli {

namespace {

using gsalg::GaussianRational;
using gsalg::Parity;
using gsalg::Rational;
using supercalc::GrassmannPoly;
using supercalc::SuperVectorField;

enum class Tok { Num, Imag, Coord, DOp, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos = 0;
  Rational num;          // Num
  std::size_t coord = 0; // Coord / DOp
};

class Lexer {
public:
  Lexer(const std::string& src, std::size_t n_even, std::size_t n_odd)
      : src_(src), n_even_(n_even), n_odd_(n_odd) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  std::size_t coord_index(std::size_t pos) {
    // x<k> or th<k>, 1-based
    bool odd = false;
    if (src_[pos_] == 'x') {
      ++pos_;
    } else if (src_.compare(pos_, 2, "th") == 0) {
      odd = true;
      pos_ += 2;
    } else {
      throw ParseError(pos, "expected a coordinate name (x<k> or th<k>)");
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos, "coordinate name needs an index");
    std::size_t k = std::stoul(src_.substr(start, pos_ - start));
    if (k == 0) throw ParseError(pos, "coordinate indices are 1-based");
    if (!odd) {
      if (k > n_even_)
        throw ParseError(pos, "x" + std::to_string(k) + " exceeds the even dimension " +
                                  std::to_string(n_even_));
      return k - 1;
    }
    if (k > n_odd_)
      throw ParseError(pos, "th" + std::to_string(k) + " exceeds the odd dimension " +
                                std::to_string(n_odd_));
    return n_even_ + k - 1;
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_.pos = pos_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        std::size_t den = pos_ + 1;
        while (den < src_.size() && std::isdigit(static_cast<unsigned char>(src_[den]))) ++den;
        if (den == pos_ + 1) throw ParseError(pos_, "missing denominator");
        pos_ = den;
      }
      tok_.kind = Tok::Num;
      tok_.num = Rational(src_.substr(start, pos_ - start));
      tok_.num.canonicalize();
      return;
    }
    if (c == 'i' && (pos_ + 1 >= src_.size() ||
                     !std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))) {
      tok_.kind = Tok::Imag;
      ++pos_;
      return;
    }
    if (c == 'D' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '[') {
      std::size_t at = pos_;
      pos_ += 2;
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_.coord = coord_index(at);
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ >= src_.size() || src_[pos_] != ']')
        throw ParseError(at, "unterminated D[...]");
      ++pos_;
      tok_.kind = Tok::DOp;
      return;
    }
    if (c == 'x' || c == 't') {
      tok_.coord = coord_index(pos_);
      tok_.kind = Tok::Coord;
      return;
    }
    switch (c) {
    case '+': tok_.kind = Tok::Plus; break;
    case '-': tok_.kind = Tok::Minus; break;
    case '*': tok_.kind = Tok::Star; break;
    case '^': tok_.kind = Tok::Caret; break;
    case '(': tok_.kind = Tok::LParen; break;
    case ')': tok_.kind = Tok::RParen; break;
    default:
      throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t n_even_, n_odd_;
  std::size_t pos_ = 0;
  Token tok_;
};

struct Value {
  bool is_field = false;
  GrassmannPoly fn;
  std::vector<GrassmannPoly> coeffs;
};

class Parser {
public:
  Parser(const std::string& src, std::size_t n, std::size_t m)
      : lex_(src, n, m), n_(n), m_(m) {}

  Value parse() {
    Value v = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError(t.pos, "trailing input");
    return v;
  }

private:
  Value make_fn(GrassmannPoly g) {
    Value v;
    v.fn = std::move(g);
    return v;
  }

  Value expr() {
    Value acc = term();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k != Tok::Plus && k != Tok::Minus) return acc;
      Token op = lex_.take();
      Value rhs = term();
      acc = add(std::move(acc), std::move(rhs), k == Tok::Minus, op.pos);
    }
  }

  Value term() {
    Value acc = unary();
    while (lex_.peek().kind == Tok::Star) {
      Token op = lex_.take();
      Value rhs = unary();
      acc = mul(std::move(acc), std::move(rhs), op.pos);
    }
    return acc;
  }

  Value unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      Value v = unary();
      return scale(std::move(v), GaussianRational(-1));
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (lex_.peek().kind != Tok::Caret) return base;
    Token op = lex_.take();
    Token e = lex_.take();
    if (e.kind != Tok::Num || e.num.get_den() != 1 || e.num < 0)
      throw ParseError(op.pos, "exponent must be a nonnegative integer");
    if (base.is_field) throw ParseError(op.pos, "cannot exponentiate a vector field");
    GrassmannPoly acc = GrassmannPoly::constant(n_, m_, GaussianRational(1));
    for (long k = 0; k < e.num.get_num().get_si(); ++k) acc = acc * base.fn;
    return make_fn(std::move(acc));
  }

  Value atom() {
    Token t = lex_.take();
    switch (t.kind) {
    case Tok::Num:
      return make_fn(GrassmannPoly::constant(n_, m_, GaussianRational(t.num)));
    case Tok::Imag:
      return make_fn(GrassmannPoly::constant(n_, m_, GaussianRational::i()));
    case Tok::Coord:
      return make_fn(GrassmannPoly::coordinate(n_, m_, t.coord));
    case Tok::DOp: {
      Value v;
      v.is_field = true;
      v.coeffs.assign(n_ + m_, GrassmannPoly(n_, m_));
      v.coeffs[t.coord] = GrassmannPoly::constant(n_, m_, GaussianRational(1));
      return v;
    }
    case Tok::LParen: {
      Value v = expr();
      Token close = lex_.take();
      if (close.kind != Tok::RParen) throw ParseError(close.pos, "expected ')'");
      return v;
    }
    default:
      throw ParseError(t.pos, "expected a number, coordinate, 'i', '(' or D[...]");
    }
  }

  Value add(Value a, Value b, bool subtract, std::size_t pos) {
    if (subtract) b = scale(std::move(b), GaussianRational(-1));
    if (a.is_field != b.is_field) {
      // adding zero of either kind is fine
      if (!a.is_field && a.fn.is_zero()) return b;
      if (!b.is_field && b.fn.is_zero()) return a;
      throw ParseError(pos, "cannot add a superfunction and a vector field");
    }
    if (!a.is_field) {
      a.fn = a.fn + b.fn;
      return a;
    }
    for (std::size_t c = 0; c < a.coeffs.size(); ++c) a.coeffs[c] = a.coeffs[c] + b.coeffs[c];
    return a;
  }

  Value mul(Value a, Value b, std::size_t pos) {
    if (a.is_field && b.is_field)
      throw ParseError(pos, "cannot multiply two vector fields");
    if (a.is_field) throw ParseError(pos, "vector-field coefficients multiply from the left");
    if (!b.is_field) {
      a.fn = a.fn * b.fn;
      return a;
    }
    for (auto& c : b.coeffs) c = a.fn * c;
    return b;
  }

  Value scale(Value v, const GaussianRational& c) {
    if (v.is_field) {
      for (auto& g : v.coeffs) g = g.scaled(c);
    } else {
      v.fn = v.fn.scaled(c);
    }
    return v;
  }

  Lexer lex_;
  std::size_t n_, m_;
};

} // namespace

ExprValue parse_expression(const std::string& src, std::size_t n_even, std::size_t n_odd) {
  Parser p(src, n_even, n_odd);
  Value v = p.parse();
  ExprValue out;
  out.is_field = v.is_field;
  out.fn = std::move(v.fn);
  out.field_coeffs = std::move(v.coeffs);
  return out;
}

supercalc::GrassmannPoly parse_superfunction(const std::string& src, std::size_t n_even,
                                             std::size_t n_odd) {
  ExprValue v = parse_expression(src, n_even, n_odd);
  if (v.is_field) throw ParseError(0, "expected a superfunction, found a vector field");
  return v.fn;
}

supercalc::SuperVectorField parse_vector_field(const std::string& src, std::size_t n_even,
                                               std::size_t n_odd) {
  ExprValue v = parse_expression(src, n_even, n_odd);
  if (!v.is_field) {
    if (v.fn.is_zero()) return SuperVectorField(n_even, n_odd, Parity::Even);
    throw ParseError(0, "expected a vector field (use D[x1], D[th1], ...)");
  }
  // infer the field parity from the nonzero coefficients
  std::optional<Parity> parity;
  for (std::size_t c = 0; c < v.field_coeffs.size(); ++c) {
    const GrassmannPoly& g = v.field_coeffs[c];
    if (g.is_zero()) continue;
    auto gp = g.parity();
    if (!gp) throw ParseError(0, "coefficient of D[" + std::to_string(c) + "] is not homogeneous");
    Parity implied = c < n_even ? *gp : *gp + Parity::Odd;
    if (!parity)
      parity = implied;
    else if (*parity != implied)
      throw ParseError(0, "vector field mixes parities across its coefficients");
  }
  return SuperVectorField(n_even, n_odd, parity.value_or(Parity::Even),
                          std::move(v.field_coeffs));
}

} // namespace spcli
