#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace glevi {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws ErrorKind::ParseError on malformed text
/// or a zero denominator. When `canonical` is given it is set to whether the
/// text was already in lowest-terms form ("2/4" and "+1" are not).
Rational parse_rational(std::string_view text, bool* canonical = nullptr);

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string to_string(const Rational& value);

bool is_zero(const Rational& value);
bool is_integer(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);

/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

Rational dot(const Vector& a, const Vector& b);

/// Lexicographic order on equal-length vectors.
bool lex_less(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace glevi
