#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glevi/matrix.hpp"

namespace glevi {

/// Univariate polynomial over Q, coefficients stored from the constant term up.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);
  /// t - root
  static Polynomial linear(const Rational& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const Vector& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& t) const;
  Matrix evaluate(const Matrix& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// (quotient, remainder) of a / b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  Vector coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
bool is_squarefree(const Polynomial& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

std::string to_string(const Polynomial& p);

}  // namespace glevi
