#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace catwalk {

using Rational = boost::multiprecision::cpp_rational;

/// Truncated formal power series with exact rational coefficients.
/// order() is the truncation: exponents >= order are unknown. Binary
/// operations truncate to the smaller order and never extend it; equality
/// compares coefficients up to the smaller order.
class Series {
 public:
  explicit Series(int order);
  static Series constant(const Rational& c, int order);
  static Series monomial(const Rational& c, int exponent, int order);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int exponent) const;
  void set(int exponent, Rational value);

  /// Drops the lowest `k` exponents (all must be zero) and reduces the
  /// order by k; used to cancel common factors of x before division.
  Series shift_down(int k) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  /// Requires b[0] != 0.
  friend Series operator/(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);

 private:
  std::vector<Rational> coeffs_;
};

/// Square root of a series with constant term 1, by Newton iteration
/// S <- (S + a/S)/2 with doubling precision.
Series sqrt_series(const Series& a);

/// a(x/(1-x)) / (1-x), Horner substitution at the input's order. Both the
/// substitution and the final division reduce to prefix sums.
Series compose_geom(const Series& a);

/// Named generating functions, expanded to `order` coefficients:
///   M        Dyck meanders with catastrophes, by length
///   Mprime   Motzkin meanders with catastrophes (M composed at x/(1-x))
///   Astar    family A-star by semilength: (1 - sqrt(1-4x^2)) / (2x^2)
///   Aprime   Dyck excursions with catastrophes / family A-prime
///   catalan  reference Catalan numbers
///   motzkin  reference Motzkin numbers
Series gf(std::string_view name, int order);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  int first_failing_exponent = -1;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool pass = false;
};

/// Verifies the functional-equation system at the given order (>= 8):
/// the A-star quadratic, the square-root defining identity, the
/// K / R / Kbar reconstruction of Aprime, and the arch-sequence identity
/// pinning A(x) = M(x).
IdentityReport check_identities(int order);

}  // namespace catwalk
