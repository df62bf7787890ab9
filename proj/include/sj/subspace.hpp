#ifndef SJ_SUBSPACE_HPP
#define SJ_SUBSPACE_HPP

#include "sj/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sj {

using ParityVec = std::vector<std::uint8_t>;

// Row space kept in reduced echelon form; rows ordered by pivot column.
// add() is the incremental workhorse of the closure algorithms.
template <class K>
class RowSpan {
 public:
  RowSpan() : ambient_(0) {}
  explicit RowSpan(int ambient_dim) : ambient_(ambient_dim) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduces v against the current rows (in place).
  void reduce(Vec<K>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
    }
  }

  bool contains(Vec<K> v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw dimension_mismatch("subspace membership: vector length");
    reduce(v);
    return vec_is_zero(v);
  }

  // Adjoins v; returns true when the dimension grew.
  bool add(Vec<K> v) {
    if (static_cast<int>(v.size()) != ambient_)
      throw dimension_mismatch("subspace add: vector length");
    reduce(v);
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    K inv = v[p];
    for (int j = p; j < ambient_; ++j) v[j] = v[j] / inv;
    for (auto& r : rows_) {
      const K& c = r[p];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(v[j])) r[j] -= f * v[j];
    }
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    auto pos = at - pivots_.begin();
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  friend bool operator==(const RowSpan& a, const RowSpan& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const RowSpan& a, const RowSpan& b) {
    return !(a == b);
  }

  bool contains_span(const RowSpan& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

 private:
  int ambient_;
  std::vector<Vec<K>> rows_;
  std::vector<int> pivots_;
};

// Express vectors as exact combinations of a fixed generating list.
template <class K>
class CoordSolver {
 public:
  CoordSolver(const std::vector<Vec<K>>& gens, int ambient_dim, const K& one)
      : ambient_(ambient_dim), ngens_(static_cast<int>(gens.size())) {
    for (int g = 0; g < ngens_; ++g) {
      Vec<K> combo = zero_vec<K>(ngens_);
      combo[g] = one;
      add_row(gens[g], std::move(combo));
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Coefficients over the original generators, or nullopt if v is outside
  // the span. When generators are dependent an arbitrary valid combination
  // is returned.
  std::optional<Vec<K>> express(Vec<K> v) const {
    Vec<K> coeff = zero_vec<K>(ngens_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
      vec_axpy(coeff, f, combos_[i]);
    }
    if (!vec_is_zero(v)) return std::nullopt;
    return coeff;
  }

 private:
  void add_row(Vec<K> v, Vec<K> combo) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (is_zero(c)) continue;
      K f = c;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
      for (int g = 0; g < ngens_; ++g)
        if (!is_zero(combos_[i][g])) combo[g] -= f * combos_[i][g];
    }
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return;
    K inv = v[p];
    for (int j = p; j < ambient_; ++j) v[j] = v[j] / inv;
    for (K& c : combo) c = c / inv;
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
  }

  int ambient_;
  int ngens_;
  std::vector<Vec<K>> rows_;
  std::vector<Vec<K>> combos_;
  std::vector<int> pivots_;
};

struct not_homogeneous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
int vector_parity(const Vec<K>& v, const ParityVec& parities) {
  int par = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    int p = parities[i];
    if (par < 0)
      par = p;
    else if (par != p)
      return -1;  // mixed support
  }
  return par < 0 ? 0 : par;  // zero vector counts as even
}

// Homogeneous subspace of a graded ambient space: one echelon-reduced basis
// per parity. Because homogeneous vectors of different parity have disjoint
// coordinate support, the union of the two bases is itself echelon with
// distinct pivots.
template <class K>
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(int ambient_dim, ParityVec parities)
      : parities_(std::move(parities)),
        even_(ambient_dim),
        odd_(ambient_dim) {
    if (static_cast<int>(parities_.size()) != ambient_dim)
      throw dimension_mismatch("parity vector length");
  }

  static GradedSubspace full(const ParityVec& parities, const K& one) {
    GradedSubspace s(static_cast<int>(parities.size()), parities);
    for (std::size_t i = 0; i < parities.size(); ++i) {
      Vec<K> e = zero_vec<K>(static_cast<int>(parities.size()));
      e[i] = one;
      s.add_homogeneous(e);
    }
    return s;
  }

  int ambient_dim() const { return even_.ambient_dim(); }
  const ParityVec& parities() const { return parities_; }
  int dim() const { return even_.dim() + odd_.dim(); }
  int even_dim() const { return even_.dim(); }
  int odd_dim() const { return odd_.dim(); }
  const RowSpan<K>& even() const { return even_; }
  const RowSpan<K>& odd() const { return odd_; }

  // Adds a homogeneous vector; throws when the support is parity-mixed.
  bool add_homogeneous(const Vec<K>& v) {
    int p = vector_parity(v, parities_);
    if (p < 0) throw not_homogeneous("vector has parity-mixed support");
    return p == 0 ? even_.add(v) : odd_.add(v);
  }

  // v need not be homogeneous: membership is tested against the union of
  // the two parity blocks.
  bool contains(Vec<K> v) const {
    if (static_cast<int>(v.size()) != ambient_dim())
      throw dimension_mismatch("subspace membership: vector length");
    even_.reduce(v);
    odd_.reduce(v);
    return vec_is_zero(v);
  }

  std::vector<Vec<K>> basis() const {
    std::vector<Vec<K>> b = even_.rows();
    b.insert(b.end(), odd_.rows().begin(), odd_.rows().end());
    return b;
  }

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }
  friend bool operator!=(const GradedSubspace& a, const GradedSubspace& b) {
    return !(a == b);
  }

 private:
  ParityVec parities_;
  RowSpan<K> even_;
  RowSpan<K> odd_;
};

template <class K>
GradedSubspace<K> span_of_homogeneous(const std::vector<Vec<K>>& gens,
                                      const ParityVec& parities) {
  GradedSubspace<K> s(static_cast<int>(parities.size()), parities);
  for (const auto& g : gens) s.add_homogeneous(g);
  return s;
}

// Splits an arbitrary span into parity components. Succeeds exactly when the
// span is graded (each basis vector's parity parts stay inside).
template <class K>
std::optional<GradedSubspace<K>> graded_split(const RowSpan<K>& span,
                                              const ParityVec& parities) {
  GradedSubspace<K> s(span.ambient_dim(), parities);
  for (const auto& r : span.rows()) {
    Vec<K> even_part = zero_vec<K>(span.ambient_dim());
    Vec<K> odd_part = zero_vec<K>(span.ambient_dim());
    for (int j = 0; j < span.ambient_dim(); ++j)
      (parities[j] == 0 ? even_part[j] : odd_part[j]) = r[j];
    if (!span.contains(even_part) || !span.contains(odd_part))
      return std::nullopt;
    s.add_homogeneous(even_part);
    s.add_homogeneous(odd_part);
  }
  return s;
}

template <class K>
GradedSubspace<K> subspace_sum(const GradedSubspace<K>& a,
                               const GradedSubspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.parities() != b.parities())
    throw dimension_mismatch("subspace sum: ambient mismatch");
  GradedSubspace<K> s = a;
  for (const auto& r : b.even().rows()) s.add_homogeneous(r);
  for (const auto& r : b.odd().rows()) s.add_homogeneous(r);
  return s;
}

// Deterministic homogeneous complement: the span of the non-pivot coordinate
// vectors of each parity block.
template <class K>
GradedSubspace<K> graded_complement(const GradedSubspace<K>& s, const K& one) {
  GradedSubspace<K> c(s.ambient_dim(), s.parities());
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (int p : s.even().pivots()) pivot[p] = true;
  for (int p : s.odd().pivots()) pivot[p] = true;
  for (int j = 0; j < s.ambient_dim(); ++j) {
    if (pivot[j]) continue;
    Vec<K> e = zero_vec<K>(s.ambient_dim());
    e[j] = one;
    c.add_homogeneous(e);
  }
  return c;
}

inline GradedSubspace<Fp> reduce_mod_p(const GradedSubspace<Rational>& s,
                                       long long p) {
  GradedSubspace<Fp> r(s.ambient_dim(), s.parities());
  for (const auto& v : s.even().rows()) r.add_homogeneous(reduce_mod_p(v, p));
  for (const auto& v : s.odd().rows()) r.add_homogeneous(reduce_mod_p(v, p));
  return r;
}

}  // namespace sj

#endif
