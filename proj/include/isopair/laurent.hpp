#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace isopair {

/// A Laurent monomial: variable name -> nonzero integer exponent.
using Monomial = std::map<std::string, int>;

/// Integer-coefficient Laurent polynomial in named variables. Used to
/// reproduce the transfer matrices symbolically; only division by a unit
/// (a single term with coefficient +-1) is supported.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  static Laurent variable(const std::string& name);
  static Laurent monomial(const Monomial& m, std::int64_t coeff = 1);
  /// Parses the LaTeX-ish notation used for printed matrices, e.g.
  /// "a_{22}b_{21}a_{31} + b_{22}a_{32}a_{31}", "-a_{21}^{-1}b_{21}", "1", "0".
  static Laurent parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  /// True for a single term with coefficient +1 or -1.
  bool is_unit() const;
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  Laurent zero_like() const { return {}; }
  Laurent one_like() const { return Laurent(1); }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  /// Throws DivisionByZero when `o` is not a unit.
  Laurent& operator/=(const Laurent& o);
  Laurent inverse() const;

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Canonical rendering: terms in monomial order, variables sorted by name,
  /// e.g. "-a_{21}^{-1}a_{22}^{-1}a_{33}^{-1}b_{22}b_{33}".
  std::string str() const;

 private:
  std::map<Monomial, std::int64_t> terms_;
  void add_term(const Monomial& m, std::int64_t c);
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator*(Laurent a, const Laurent& b);
Laurent operator/(Laurent a, const Laurent& b);

}  // namespace isopair
