#ifndef GSALG_GAUSSIAN_RATIONAL_HPP
#define GSALG_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsalg {

using Rational = mpq_class;

// Exact element of Q(i).  mpq_class keeps both components canonical
// (positive denominator, lowest terms) after every operation, so equality
// is plain component comparison.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    Rational n = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Wire format: "a", "a/b", "c*i", "a/b+c/d*i", "a/b-c/d*i"; lone "i" and "-i"
  // are accepted on input.
  std::string str() const;
  static GaussianRational parse(const std::string& s);

  // Nearest double approximations, for the numeric flow layer only.
  double re_d() const { return re_.get_d(); }
  double im_d() const { return im_.get_d(); }

private:
  Rational re_, im_;
};

using Vec = std::vector<GaussianRational>;

} // namespace gsalg

#endif
