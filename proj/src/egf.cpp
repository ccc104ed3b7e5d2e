#include "prelie/egf.hpp"

#include <string>

namespace prelie {

namespace {

void require_same_order(const Egf& a, const Egf& b) {
  if (a.order() != b.order())
    throw SeriesError("series orders differ: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
}

void require_no_constant(const Egf& f, const char* what) {
  if (sgn(f[0]) != 0) throw SeriesError(std::string(what) + ": nonzero constant term");
}

}  // namespace

Egf::Egf(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() > order + 1) throw SeriesError("more coefficients than order allows");
  c_.resize(order + 1);
  for (auto& c : c_) c.canonicalize();
}

Egf Egf::x(std::size_t order) {
  Egf f(order);
  if (order >= 1) f[1] = 1;
  return f;
}

Egf Egf::constant(std::size_t order, const Rational& a) {
  Egf f(order);
  f[0] = a;
  return f;
}

Egf Egf::from_dims(std::size_t order, const std::vector<Integer>& dims) {
  Egf f(order);
  for (std::size_t n = 0; n < dims.size() && n <= order; ++n) {
    f[n] = Rational(dims[n], factorial(n));
    f[n].canonicalize();
  }
  return f;
}

Integer Egf::dim(std::size_t n) const {
  Rational d = c_.at(n) * Rational(factorial(n));
  if (d.get_den() != 1) throw SeriesError("non-integral dimension at n=" + std::to_string(n));
  return d.get_num();
}

Egf& Egf::operator+=(const Egf& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Egf& Egf::operator-=(const Egf& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Egf& Egf::operator*=(const Rational& a) {
  for (auto& c : c_) c *= a;
  return *this;
}

Egf operator*(const Egf& a, const Egf& b) {
  require_same_order(a, b);
  Egf r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

bool Egf::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

Egf egf_exp(const Egf& f) {
  require_no_constant(f, "egf_exp");
  // g = exp(f) satisfies g' = f' g, i.e. n g_n = sum_k k f_k g_{n-k}.
  Egf g(f.order());
  g[0] = 1;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += Rational(static_cast<long>(k)) * f[k] * g[n - k];
    g[n] = s / static_cast<long>(n);
  }
  return g;
}

Egf egf_log1p_neg(const Egf& f) {
  require_no_constant(f, "egf_log1p_neg");
  Egf out(f.order());
  Egf power = Egf::constant(f.order(), 1);
  for (std::size_t k = 1; k <= f.order(); ++k) {
    power = power * f;
    if (power.is_zero()) break;
    out += Rational(1, static_cast<long>(k)) * power;
  }
  return out;
}

Egf egf_log1p(const Egf& g) { return egf_log1p_neg(-g) *= -1; }

Egf egf_compose(const Egf& f, const Egf& g) {
  require_same_order(f, g);
  require_no_constant(g, "egf_compose");
  // Horner: f_0 + g (f_1 + g (f_2 + ...)).
  Egf acc(f.order());
  for (std::size_t k = f.order() + 1; k-- > 0;) {
    acc = acc * g;
    acc[0] += f[k];
  }
  return acc;
}

Egf egf_fixed_point_free_operad(const Egf& c, std::size_t order) {
  if (c.order() != order) throw SeriesError("generator series has the wrong order");
  if (sgn(c[0]) != 0 || (order >= 1 && sgn(c[1]) != 0))
    throw SeriesError("generator series must start in degree 2");
  Egf f = Egf::x(order);
  for (std::size_t it = 0; it <= order + 1; ++it) {
    Egf next = Egf::x(order) + egf_compose(c, f);
    if (next == f) return f;
    f = std::move(next);
  }
  throw SeriesError("fixed point iteration did not converge");
}

Egf prelie_series(std::size_t order) {
  std::vector<Integer> dims(order + 1);
  for (std::size_t n = 1; n <= order; ++n) dims[n] = ipow(static_cast<long>(n), static_cast<unsigned>(n - 1));
  return Egf::from_dims(order, dims);
}

Egf lie_series(std::size_t order) { return egf_log1p_neg(Egf::x(order)); }

Egf cyclie_series(std::size_t order) {
  std::vector<Integer> dims(order + 1);
  for (std::size_t n = 2; n <= order; ++n) dims[n] = factorial(static_cast<unsigned>(n - 2));
  return Egf::from_dims(order, dims);
}

}  // namespace prelie
