#include "catwalk/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace catwalk {

Series::Series(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(order), Rational(0));
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, int exponent, int order) {
  Series s(order);
  if (exponent < order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

const Rational& Series::operator[](int exponent) const {
  if (exponent < 0 || exponent >= order()) {
    throw std::out_of_range("coefficient beyond truncation order");
  }
  return coeffs_[static_cast<std::size_t>(exponent)];
}

void Series::set(int exponent, Rational value) {
  if (exponent < 0 || exponent >= order()) {
    throw std::out_of_range("coefficient beyond truncation order");
  }
  coeffs_[static_cast<std::size_t>(exponent)] = std::move(value);
}

Series Series::shift_down(int k) const {
  if (k < 0 || k >= order()) throw std::invalid_argument("bad shift");
  for (int i = 0; i < k; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) {
      throw std::invalid_argument("shift_down over nonzero coefficients");
    }
  }
  Series out(order() - k);
  for (int i = k; i < order(); ++i) {
    out.coeffs_[static_cast<std::size_t>(i - k)] =
        coeffs_[static_cast<std::size_t>(i)];
  }
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i < out.order(); ++i) {
    out.coeffs_[static_cast<std::size_t>(i)] = a[i] + b[i];
  }
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i < out.order(); ++i) {
    out.coeffs_[static_cast<std::size_t>(i)] = a[i] - b[i];
  }
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i < out.order(); ++i) {
    Rational acc(0);
    for (int k = 0; k <= i; ++k) {
      if (a[k] != 0 && b[i - k] != 0) acc += a[k] * b[i - k];
    }
    out.coeffs_[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

Series operator/(const Series& a, const Series& b) {
  if (b[0] == 0) {
    throw std::invalid_argument("division by a series with zero constant term");
  }
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i < out.order(); ++i) {
    Rational acc = a[i];
    for (int k = 0; k < i; ++k) {
      const Rational& c = out.coeffs_[static_cast<std::size_t>(k)];
      if (c != 0 && b[i - k] != 0) acc -= c * b[i - k];
    }
    out.coeffs_[static_cast<std::size_t>(i)] = acc / b[0];
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

namespace {

Series truncate(const Series& a, int order) {
  Series out(order);
  for (int i = 0; i < std::min(order, a.order()); ++i) out.set(i, a[i]);
  return out;
}

Series prefix_sums(const Series& a) {
  Series out(a.order());
  Rational acc(0);
  for (int i = 0; i < a.order(); ++i) {
    acc += a[i];
    out.set(i, acc);
  }
  return out;
}

Series shift_up(const Series& a) {
  Series out(a.order());
  for (int i = 1; i < a.order(); ++i) out.set(i, a[i - 1]);
  return out;
}

}  // namespace

Series sqrt_series(const Series& a) {
  if (a[0] != 1) {
    throw std::invalid_argument("sqrt_series requires constant term 1");
  }
  Series s = Series::constant(1, 1);
  int precision = 1;
  while (precision < a.order()) {
    precision = std::min(2 * precision, a.order());
    Series widened = truncate(s, precision);
    Series target = truncate(a, precision);
    Series next = widened + target / widened;
    for (int i = 0; i < precision; ++i) next.set(i, next[i] / 2);
    s = std::move(next);
  }
  return s;
}

Series compose_geom(const Series& a) {
  const int n = a.order();
  // Horner over t = x/(1-x): multiplying by t is a prefix sum then a shift.
  Series acc = Series::constant(a[n - 1], n);
  for (int k = n - 2; k >= 0; --k) {
    acc = shift_up(prefix_sums(acc));
    acc.set(0, acc[0] + a[k]);
  }
  return prefix_sums(acc);  // the final division by (1-x)
}

Series gf(std::string_view name, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (name == "catalan") {
    Series s(order);
    Rational c(1);
    for (int n = 0; n < order; ++n) {
      s.set(n, c);
      c = c * 2 * (2 * n + 1) / (n + 2);
    }
    return s;
  }
  if (name == "motzkin") {
    Series s(order);
    s.set(0, 1);
    if (order > 1) s.set(1, 1);
    for (int n = 1; n + 1 < order; ++n) {
      s.set(n + 1, (s[n] * (2 * n + 3) + s[n - 1] * (3 * n)) / (n + 3));
    }
    return s;
  }
  if (name == "Astar") {
    // Positive branch of Astar = 1 + x^2 Astar^2:  (1 - sqrt(1-4x^2))/(2x^2).
    Series root = sqrt_series(Series::monomial(-4, 2, order + 2) +
                              Series::constant(1, order + 2));
    Series numerator = Series::constant(1, order + 2) - root;
    Series shifted = numerator.shift_down(2);
    Series out(order);
    for (int i = 0; i < order; ++i) out.set(i, shifted[i] / 2);
    return out;
  }
  if (name == "M") {
    // 2x / (2x + (x+1)(sqrt(1-4x^2) - 1)); both sides carry a factor x.
    Series root = sqrt_series(Series::monomial(-4, 2, order + 1) +
                              Series::constant(1, order + 1));
    Series one = Series::constant(1, order + 1);
    Series x = Series::monomial(1, 1, order + 1);
    Series denom = Series::monomial(2, 1, order + 1) + (x + one) * (root - one);
    return Series::constant(2, order) / denom.shift_down(1);
  }
  if (name == "Mprime") {
    return compose_geom(gf("M", order));
  }
  if (name == "Aprime") {
    Series root = sqrt_series(Series::monomial(-4, 2, order) +
                              Series::constant(1, order));
    Series numerator = Series::constant(2, order) -
                       Series::monomial(3, 1, order) -
                       Series::monomial(2, 2, order) +
                       Series::monomial(1, 1, order) * root;
    Series denom = Series::constant(2, order) - Series::monomial(2, 1, order) -
                   Series::monomial(4, 2, order) -
                   Series::monomial(2, 3, order);
    return numerator / denom;
  }
  throw std::invalid_argument("unknown series name '" + std::string(name) +
                              "'");
}

namespace {

IdentityCheck compare(std::string name, const Series& lhs, const Series& rhs) {
  IdentityCheck c;
  c.name = std::move(name);
  c.pass = true;
  const int n = std::min(lhs.order(), rhs.order());
  for (int i = 0; i < n; ++i) {
    if (lhs[i] != rhs[i]) {
      c.pass = false;
      c.first_failing_exponent = i;
      break;
    }
  }
  return c;
}

}  // namespace

IdentityReport check_identities(int order) {
  if (order < 8) throw std::invalid_argument("order must be >= 8");
  const Series one = Series::constant(1, order);
  const Series x = Series::monomial(1, 1, order);
  const Series x2 = Series::monomial(1, 2, order);

  const Series astar = gf("Astar", order);
  const Series m = gf("M", order);
  const Series aprime = gf("Aprime", order);

  IdentityReport report;

  // Printed functional equation: Astar = 1 + x^2 Astar / (1 - x^2 Astar).
  report.checks.push_back(compare(
      "astar_equation", astar, one + (x2 * astar) / (one - x2 * astar)));

  // sqrt(1-4x^2)^2 = 1-4x^2.
  const Series radicand = one - Series::monomial(4, 2, order);
  const Series root = sqrt_series(radicand);
  report.checks.push_back(compare("sqrt_identity", root * root, radicand));

  // Arch sequence over interiors avoiding UUU and DUD pins A(x) = M(x).
  report.checks.push_back(
      compare("a_equals_m", one / (one - x * (one + x) * astar), m));

  // K = 1 + x (Astar - 1 + x Astar) K, R = K - Astar, Kbar = A x R,
  // and Aprime = K + Kbar.
  const Series k = one / (one - x * (astar - one + x * astar));
  const Series r = k - astar;
  const Series kbar = m * x * r;
  IdentityCheck kbar_check;
  kbar_check.name = "kbar_constant_term";
  kbar_check.pass = kbar[0] == 0;
  if (!kbar_check.pass) kbar_check.first_failing_exponent = 0;
  report.checks.push_back(kbar_check);
  report.checks.push_back(compare("aprime_reconstruction", k + kbar, aprime));

  report.pass = true;
  for (const IdentityCheck& c : report.checks) report.pass &= c.pass;
  return report;
}

}  // namespace catwalk
