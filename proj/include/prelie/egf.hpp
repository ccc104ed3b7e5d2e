#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N over Q. When it encodes
/// an S-module, c_n = dim(n) / n!. Binary operations require equal orders.
class Egf {
 public:
  explicit Egf(std::size_t order) : c_(order + 1) {}
  Egf(std::size_t order, std::vector<Rational> coeffs);

  static Egf x(std::size_t order);
  static Egf constant(std::size_t order, const Rational& a);
  /// Series with c_n = dims[n] / n! (missing entries are zero).
  static Egf from_dims(std::size_t order, const std::vector<Integer>& dims);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  Rational& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// n! * c_n; throws if that is not an integer.
  Integer dim(std::size_t n) const;

  Egf& operator+=(const Egf& o);
  Egf& operator-=(const Egf& o);
  Egf& operator*=(const Rational& a);
  friend Egf operator+(Egf a, const Egf& b) { return a += b; }
  friend Egf operator-(Egf a, const Egf& b) { return a -= b; }
  friend Egf operator-(Egf a) { return a *= -1; }
  friend Egf operator*(const Rational& s, Egf a) { return a *= s; }
  friend Egf operator*(const Egf& a, const Egf& b);
  friend bool operator==(const Egf& a, const Egf& b) { return a.c_ == b.c_; }

  bool is_zero() const;

 private:
  std::vector<Rational> c_;
};

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// exp(f); f must have zero constant term.
Egf egf_exp(const Egf& f);
/// -log(1 - f); f must have zero constant term.
Egf egf_log1p_neg(const Egf& f);
/// log(1 + g); g must have zero constant term.
Egf egf_log1p(const Egf& g);
/// f(g(x)); g must have zero constant term.
Egf egf_compose(const Egf& f, const Egf& g);

/// The series of the free operad on generators with series c:
/// the unique f with f = x + c(f) and f(0) = 0. Requires c_0 = c_1 = 0.
Egf egf_fixed_point_free_operad(const Egf& c, std::size_t order);

/// Sum n^(n-1) x^n / n!  (rooted trees).
Egf prelie_series(std::size_t order);
/// -log(1 - x).
Egf lie_series(std::size_t order);
/// Sum_{n>=2} (n-2)! x^n / n! = (1-x) log(1-x) + x.
Egf cyclie_series(std::size_t order);

}  // namespace prelie
