#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "laa/rational.hpp"

namespace laa {

/// Finite sparse linear combination of basis keys with nonzero exact
/// rational coefficients. The empty combination is zero. Keys are kept
/// in Compare order, so iteration and printing are deterministic.
template <class Key, class Compare = std::less<Key>>
class LinComb {
public:
  using map_type = std::map<Key, Rational, Compare>;

  LinComb() = default;
  explicit LinComb(Compare cmp) : terms_(std::move(cmp)) {}
  LinComb(const Key &k, const Rational &c) { add(k, c); }

  static LinComb zero() { return LinComb(); }
  static LinComb single(const Key &k, const Rational &c = Rational(1)) {
    LinComb e;
    e.add(k, c);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type &terms() const { return terms_; }

  Rational coeff(const Key &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key &k, const Rational &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinComb &operator+=(const LinComb &o) {
    for (const auto &[k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb &operator-=(const LinComb &o) {
    for (const auto &[k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb &operator*=(const Rational &c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[k, v] : terms_) v *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
  friend LinComb operator*(const Rational &c, LinComb a) { return a *= c; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto &[k, v] : r.terms_) v = -v;
    return r;
  }

  friend bool operator==(const LinComb &a, const LinComb &b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinComb &a, const LinComb &b) { return !(a == b); }

private:
  map_type terms_;
};

/// Result of reducing a family of rows over a declared finite ambient
/// basis: a reduced row-echelon basis of the span, its rank, and the
/// pivot column of each basis row.
template <class Key, class Compare = std::less<Key>>
struct RowReduced {
  std::vector<LinComb<Key, Compare>> basis;
  std::vector<std::size_t> pivots; // ambient index of each basis row's pivot
  std::size_t rank = 0;
};

namespace detail {
template <class Key, class Compare>
std::vector<Rational> densify(const LinComb<Key, Compare> &row,
                              const std::map<Key, std::size_t, Compare> &index,
                              std::size_t dim) {
  std::vector<Rational> v(dim, Rational(0));
  for (const auto &[k, c] : row.terms()) {
    auto it = index.find(k);
    if (it == index.end())
      throw std::domain_error("row references a vector outside the ambient basis");
    v[it->second] = c;
  }
  return v;
}
} // namespace detail

/// Gaussian elimination over Q with leftmost-pivot selection. The result
/// is the unique reduced echelon basis of the span for the given ambient
/// order, so it is deterministic and idempotent.
template <class Key, class Compare = std::less<Key>>
RowReduced<Key, Compare> row_reduce(const std::vector<LinComb<Key, Compare>> &rows,
                                    const std::vector<Key> &ambient) {
  std::map<Key, std::size_t, Compare> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  if (index.size() != ambient.size())
    throw std::domain_error("ambient basis contains duplicates");

  std::vector<std::vector<Rational>> mat;
  mat.reserve(rows.size());
  for (const auto &r : rows) mat.push_back(detail::densify(r, index, ambient.size()));

  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivots;
  for (auto &row : mat) {
    // reduce against the rows found so far
    for (std::size_t b = 0; b < echelon.size(); ++b) {
      const Rational c = row[pivots[b]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] -= c * echelon[b][j];
    }
    std::size_t p = 0;
    while (p < row.size() && row[p].is_zero()) ++p;
    if (p == row.size()) continue; // dependent row
    const Rational inv = row[p].inverse();
    for (auto &x : row) x *= inv;
    // back-substitute into earlier rows to reach reduced echelon form
    for (std::size_t b = 0; b < echelon.size(); ++b) {
      const Rational c = echelon[b][p];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < row.size(); ++j)
        echelon[b][j] -= c * row[j];
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p) ++pos;
    echelon.insert(echelon.begin() + pos, row);
    pivots.insert(pivots.begin() + pos, p);
  }

  RowReduced<Key, Compare> out;
  out.rank = echelon.size();
  out.pivots = pivots;
  for (const auto &row : echelon) {
    LinComb<Key, Compare> e;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) e.add(ambient[j], row[j]);
    out.basis.push_back(std::move(e));
  }
  return out;
}

/// Reduces a single element modulo the span of a reduced basis; the
/// residual is zero iff the element lies in the span.
template <class Key, class Compare = std::less<Key>>
LinComb<Key, Compare> reduce_against(LinComb<Key, Compare> e,
                                     const RowReduced<Key, Compare> &red,
                                     const std::vector<Key> &ambient) {
  for (std::size_t b = 0; b < red.basis.size(); ++b) {
    const Rational c = e.coeff(ambient[red.pivots[b]]);
    if (c.is_zero()) continue;
    LinComb<Key, Compare> sub = red.basis[b];
    sub *= c;
    e -= sub;
  }
  return e;
}

} // namespace laa
