#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prelie/lincomb.hpp"

namespace prelie {

/// Subspace of a sparse Q-vector space kept in reduced row echelon form.
///
/// Rows are indexed by their pivot key; the pivot of a new row is the
/// smallest key surviving reduction. Optionally records, for every row, its
/// expression over the inserted generators so that membership can return
/// coordinates.
template <class Key, class Compare = std::less<Key>>
class Span {
 public:
  using Vec = LinComb<Key, Compare>;
  using Coords = LinComb<std::size_t>;

  explicit Span(bool track_coords = false) : track_(track_coords) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t generator_count() const { return generators_; }
  bool tracks_coords() const { return track_; }
  const std::map<Key, Vec, Compare>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }

  /// Remainder of v modulo the span; supported on non-pivot keys and zero
  /// exactly when v lies in the span.
  Vec reduce(const Vec& v) const {
    Vec r = v;
    for (const auto& [k, c] : v) {
      auto it = rows_.find(k);
      if (it != rows_.end()) r.axpy(-c, it->second);
    }
    return r;
  }

  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  /// Adds v as a generator. Returns true iff the rank increased.
  bool insert(const Vec& v) {
    std::size_t gen = generators_++;
    Vec r = v;
    Coords comb;
    if (track_) comb.add(gen, 1);
    for (const auto& [k, c] : v) {
      auto it = rows_.find(k);
      if (it == rows_.end()) continue;
      r.axpy(-c, it->second);
      if (track_) comb.axpy(-c, combs_.at(k));
    }
    if (r.is_zero()) return false;
    Key pivot = r.begin()->first;
    Rational inv = 1 / r.begin()->second;
    r *= inv;
    if (track_) comb *= inv;
    for (auto& [p, row] : rows_) {
      Rational c = row.coeff(pivot);
      if (sgn(c) == 0) continue;
      row.axpy(-c, r);
      if (track_) combs_.at(p).axpy(-c, comb);
    }
    rows_.emplace(pivot, std::move(r));
    if (track_) combs_.emplace(pivot, std::move(comb));
    return true;
  }

  /// Coefficients of v over the inserted generators, or nullopt if v is not
  /// in the span. Requires coordinate tracking.
  std::optional<Coords> coords(const Vec& v) const {
    if (!track_) throw std::logic_error("Span::coords requires coordinate tracking");
    Vec r = reduce(v);
    if (!r.is_zero()) return std::nullopt;
    Coords out;
    for (const auto& [k, c] : v) {
      auto it = combs_.find(k);
      if (it != combs_.end()) out.axpy(c, it->second);
    }
    return out;
  }

 private:
  bool track_;
  std::size_t generators_ = 0;
  std::map<Key, Vec, Compare> rows_;
  std::map<Key, Coords, Compare> combs_;
};

}  // namespace prelie
