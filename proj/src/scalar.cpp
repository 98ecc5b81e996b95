#include "isopair/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "isopair/error.hpp"

namespace isopair {

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

Mode mode_from_string(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  throw ParseError("unknown mode '" + s + "' (expected exact|float)");
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text.push_back(c);
  if (text.empty()) throw ParseError("empty rational");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + raw + "'");
    mpz_class d(strip_plus(den));
    if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
    mpq_class q(mpz_class(strip_plus(num), 10), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (!valid_int(whole) || (!frac.empty() && !valid_int(frac)) || (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw ParseError("malformed decimal '" + raw + "'");
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpq_class q(mpz_class(whole + frac, 10), den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  if (!valid_int(text)) throw ParseError("malformed rational '" + raw + "'");
  return mpq_class(mpz_class(strip_plus(text), 10));
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar::Scalar(std::complex<double> z) : mode_(Mode::Float), f_(z) {}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text.push_back(c);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return Scalar(parse_rational(text));
  std::string body = text.substr(0, text.size() - 1);
  // split "re+im" at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return Scalar(parse_rational(re_part), parse_rational(im_part));
}

std::complex<double> Scalar::to_complex() const {
  if (mode_ == Mode::Float) return f_;
  return {re_.get_d(), im_.get_d()};
}

bool Scalar::is_zero() const {
  if (mode_ == Mode::Float) return f_ == std::complex<double>(0.0, 0.0);
  return sgn(re_) == 0 && sgn(im_) == 0;
}

bool Scalar::is_real() const {
  if (mode_ == Mode::Float) return f_.imag() == 0.0;
  return sgn(im_) == 0;
}

bool Scalar::is_positive_real() const {
  if (mode_ == Mode::Float) return f_.imag() == 0.0 && f_.real() > 0.0;
  return sgn(im_) == 0 && sgn(re_) > 0;
}

bool Scalar::is_negative_real() const {
  if (mode_ == Mode::Float) return f_.imag() == 0.0 && f_.real() < 0.0;
  return sgn(im_) == 0 && sgn(re_) < 0;
}

Scalar Scalar::as_mode(Mode m) const {
  if (m == mode_) return *this;
  if (m == Mode::Float) return Scalar(to_complex());
  // float -> exact: exact binary expansion of the doubles
  return Scalar(mpq_class(f_.real()), mpq_class(f_.imag()));
}

Scalar Scalar::zero_like() const { return mode_ == Mode::Exact ? Scalar() : Scalar(std::complex<double>{}); }

Scalar Scalar::one_like() const {
  return mode_ == Mode::Exact ? Scalar(1) : Scalar(std::complex<double>(1.0, 0.0));
}

void Scalar::promote() {
  if (mode_ == Mode::Float) return;
  f_ = to_complex();
  mode_ = Mode::Float;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mode_ == Mode::Float) {
    r.f_ = -f_;
  } else {
    r.re_ = -re_;
    r.im_ = -im_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (mode_ == Mode::Exact && o.mode_ == Mode::Exact) {
    re_ += o.re_;
    im_ += o.im_;
  } else {
    promote();
    f_ += o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (mode_ == Mode::Exact && o.mode_ == Mode::Exact) {
    re_ -= o.re_;
    im_ -= o.im_;
  } else {
    promote();
    f_ -= o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (mode_ == Mode::Exact && o.mode_ == Mode::Exact) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
    } else {
      mpq_class r = re_ * o.re_ - im_ * o.im_;
      mpq_class i = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(r);
      im_ = std::move(i);
    }
  } else {
    promote();
    f_ *= o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (mode_ == Mode::Exact && o.mode_ == Mode::Exact) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ /= o.re_;
    } else {
      mpq_class den = o.re_ * o.re_ + o.im_ * o.im_;
      mpq_class r = (re_ * o.re_ + im_ * o.im_) / den;
      mpq_class i = (im_ * o.re_ - re_ * o.im_) / den;
      re_ = std::move(r);
      im_ = std::move(i);
    }
  } else {
    promote();
    f_ /= o.to_complex();
  }
  return *this;
}

Scalar Scalar::inverse() const { return one_like() / *this; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one_like();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode_ == Mode::Exact && b.mode_ == Mode::Exact) return a.re_ == b.re_ && a.im_ == b.im_;
  return a.to_complex() == b.to_complex();
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  std::complex<double> x = a.to_complex(), y = b.to_complex();
  double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

std::string Scalar::str() const {
  if (mode_ == Mode::Float) {
    char buf[64];
    if (f_.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", f_.real());
    } else {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", f_.real(), f_.imag());
    }
    return buf;
  }
  if (sgn(im_) == 0) return rational_string(re_);
  std::string im = rational_string(im_);
  if (im[0] != '-') im = "+" + im;
  if (sgn(re_) == 0) return (im[0] == '+' ? im.substr(1) : im) + "i";
  return rational_string(re_) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace isopair
