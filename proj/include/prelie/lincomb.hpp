#pragma once

#include <functional>
#include <map>
#include <utility>

#include "prelie/rational.hpp"

namespace prelie {

/// Finite Q-linear combination of basis keys. Zero coefficients are never
/// stored, so two combinations are equal iff their maps are equal.
template <class Key, class Compare = std::less<Key>>
class LinComb {
 public:
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(const Key& k, const Rational& c = 1) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// this += a * x
  void axpy(const Rational& a, const LinComb& x) {
    if (sgn(a) == 0) return;
    auto hint = terms_.begin();
    for (const auto& [k, c] : x.terms_) {
      hint = terms_.lower_bound(k);
      if (hint != terms_.end() && !terms_.key_comp()(k, hint->first)) {
        hint->second += a * c;
        if (sgn(hint->second) == 0) hint = terms_.erase(hint);
      } else {
        terms_.emplace_hint(hint, k, a * c);
      }
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }
  void erase(const Key& k) { terms_.erase(k); }

  LinComb& operator+=(const LinComb& o) {
    axpy(1, o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    axpy(-1, o);
    return *this;
  }
  LinComb& operator*=(const Rational& a) {
    if (sgn(a) == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= a;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Applies a linear map given on basis keys.
  template <class F>
  auto map_linear(F&& f) const -> decltype(f(std::declval<const Key&>())) {
    decltype(f(std::declval<const Key&>())) out;
    for (const auto& [k, c] : terms_) out.axpy(c, f(k));
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace prelie
