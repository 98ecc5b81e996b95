#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace isopair {

enum class Mode { Exact, Float };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

/// A complex number that is either exact (rational real and imaginary parts)
/// or a double-precision complex. Arithmetic between an exact and a float
/// operand yields a float result.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);
  explicit Scalar(std::complex<double> z);

  static Scalar rational(long num, long den = 1);
  static Scalar float_value(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }
  /// Parses "p/q", "p", "-3/4", or a decimal such as "0.25" (exact), plus an
  /// optional imaginary part given as "re+imi" / "re-imi" / "imi".
  static Scalar parse(const std::string& text);

  Mode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == Mode::Exact; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  std::complex<double> to_complex() const;

  bool is_zero() const;
  bool is_real() const;
  /// Strictly positive real (exact sign test in exact mode).
  bool is_positive_real() const;
  bool is_negative_real() const;

  Scalar as_mode(Mode m) const;
  Scalar zero_like() const;
  Scalar one_like() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DivisionByZero for a zero divisor in either mode.
  Scalar& operator/=(const Scalar& o);

  Scalar inverse() const;
  Scalar pow(long e) const;
  double abs() const { return std::abs(to_complex()); }

  /// Exact-mode structural equality; float mode compares the doubles exactly.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" for real exact values, "p/q+r/si" otherwise; float mode uses %.17g.
  std::string str() const;

 private:
  Mode mode_ = Mode::Exact;
  mpq_class re_ = 0;
  mpq_class im_ = 0;
  std::complex<double> f_{};

  void promote();
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(Scalar a, const Scalar& b);
Scalar operator/(Scalar a, const Scalar& b);

/// |a - b| <= tol * max(1, |a|, |b|); exact operands compare exactly.
bool approx_equal(const Scalar& a, const Scalar& b, double tol);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Serialises an exact rational as a decimal string "p/q" (or "p" when q = 1).
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

}  // namespace isopair
