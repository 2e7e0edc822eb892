#pragma once

#include "assoc/polytope.hpp"
#include "assoc/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace assoc::testing {

inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline QPoint random_point(std::mt19937_64& rng, std::size_t dim, int max_num = 20, int max_den = 7) {
  QPoint p(dim);
  for (auto& x : p) x = random_rational(rng, max_num, max_den);
  return p;
}

inline std::set<QPoint> as_set(const std::vector<QPoint>& pts) { return {pts.begin(), pts.end()}; }

/// Box [-bound, bound]^dim cut by `cuts` random halfspaces through points near the origin.
inline HPolytope random_hpolytope(std::mt19937_64& rng, std::size_t dim, std::size_t cuts) {
  HPolytope h;
  h.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    h.inequalities.push_back({unit_vector(dim, i), Rational(-5), {}});
    h.inequalities.push_back({negate(unit_vector(dim, i)), Rational(-5), {}});
  }
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> off(-6, 2);
  for (std::size_t c = 0; c < cuts; ++c) {
    QVector a(dim);
    for (auto& x : a) x = coef(rng);
    if (is_zero(a)) a[0] = 1;
    h.inequalities.push_back({a, Rational(off(rng)), {}});
  }
  return h;
}

/// Uniform rational convex combination weights summing to one.
inline std::vector<Rational> random_convex_weights(std::mt19937_64& rng, std::size_t k, int den = 97) {
  std::uniform_int_distribution<int> d(0, den);
  std::vector<Rational> w(k);
  Rational total = 0;
  for (auto& x : w) {
    x = d(rng);
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace assoc::testing
