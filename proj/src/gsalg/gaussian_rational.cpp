#include "gsalg/gaussian_rational.hpp"

#include <cctype>

namespace gsalg {

namespace {

std::string rat_str(const Rational& r) { return r.get_str(); }

// Parses a rational "a" or "a/b" starting at pos; advances pos.
Rational parse_rat(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::invalid_argument("GaussianRational: expected number in '" + s + "'");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw std::invalid_argument("GaussianRational: bad denominator in '" + s + "'");
  }
  Rational r(s.substr(start, pos - start));
  r.canonicalize();
  return r;
}

} // namespace

std::string GaussianRational::str() const {
  if (is_real()) return rat_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rat_str(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return rat_str(re_) + "+" + imag;
  // imag already carries the minus sign
  return rat_str(re_) + imag;
}

GaussianRational GaussianRational::parse(const std::string& s) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto parse_term = [&](Rational& re, Rational& im) {
    skip_ws();
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    }
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      im += sign;
      return;
    }
    Rational r = parse_rat(s, pos);
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != 'i')
        throw std::invalid_argument("GaussianRational: expected 'i' in '" + s + "'");
      ++pos;
      im += sign * r;
    } else if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      im += sign * r;
    } else {
      re += sign * r;
    }
  };

  Rational re(0), im(0);
  parse_term(re, im);
  size_t save = pos;
  skip_ws();
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    parse_term(re, im);
  } else {
    pos = save;
  }
  skip_ws();
  if (pos != s.size())
    throw std::invalid_argument("GaussianRational: trailing characters in '" + s + "'");
  return {re, im};
}

} // namespace gsalg
