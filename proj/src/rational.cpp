#include "assoc/rational.hpp"

#include "assoc/errors.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace assoc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("empty number in '" + std::string(whole) + "'");
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad number '" + std::string(whole) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("not an exact rational (expected p/q): '" + std::string(whole) + "'");
    }
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits);
}

void check_dims(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("vector dimensions differ: " + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(trim(s.substr(0, slash)), text);
  Integer den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

QVector parse_qvector(std::string_view csv) {
  QVector out;
  csv = trim(csv);
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = csv.find(',', pos);
    out.push_back(parse_rational(csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::vector<std::string> to_strings(const QVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

QVector zeros(std::size_t dim) { return QVector(dim, Rational(0)); }

QVector unit_vector(std::size_t dim, std::size_t i) {
  QVector e = zeros(dim);
  e.at(i) = 1;
  return e;
}

Rational dot(const QVector& a, const QVector& b) {
  check_dims(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  check_dims(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  check_dims(a, b);
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector scale(const Rational& s, const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

QVector negate(const QVector& a) { return scale(Rational(-1), a); }

QVector midpoint(const QVector& a, const QVector& b) { return scale(Rational(1, 2), add(a, b)); }

bool is_zero(const QVector& a) {
  for (const auto& q : a) {
    if (q != 0) return false;
  }
  return true;
}

Rational max_abs(const QVector& a) {
  Rational m = 0;
  for (const auto& q : a) m = std::max(m, Rational(abs(q)));
  return m;
}

QVector primitive(const QVector& a) {
  Integer l = 1;
  for (const auto& q : a) l = lcm(l, denominator(q));
  std::vector<Integer> ints(a.size());
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ints[i] = numerator(a[i]) * (l / denominator(a[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) return a;
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

}  // namespace assoc
