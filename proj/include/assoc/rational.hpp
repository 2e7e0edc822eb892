#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace assoc {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Fixed-length coordinate tuple over the rationals. Points and direction
/// vectors share the representation.
using QVector = std::vector<Rational>;
using QPoint = QVector;

/// Parses "p/q", "p" or "-p/q". Decimal notation is rejected.
Rational parse_rational(std::string_view text);
/// Comma separated list of rationals, e.g. "1/3,2/3".
QVector parse_qvector(std::string_view csv);

std::string to_string(const Rational& q);
std::string to_string(const QVector& v);
std::vector<std::string> to_strings(const QVector& v);
double to_double(const Rational& q);

QVector zeros(std::size_t dim);
QVector unit_vector(std::size_t dim, std::size_t i);

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& s, const QVector& a);
QVector negate(const QVector& a);
QVector midpoint(const QVector& a, const QVector& b);
bool is_zero(const QVector& a);

/// Sup-norm.
Rational max_abs(const QVector& a);

/// Scales a nonzero vector to the primitive integer vector on the same ray.
QVector primitive(const QVector& a);

}  // namespace assoc
