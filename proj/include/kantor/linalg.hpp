#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kantor/scalar.hpp"

namespace kantor {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoSolution : public std::runtime_error {
 public:
  NoSolution() : std::runtime_error("linear system is inconsistent") {}
};

template <class S>
using Vec = std::vector<S>;

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Sparse vector with explicit dimension; entries sorted by index, no stored zeros.
template <class S>
class SparseVector {
 public:
  using Entry = std::pair<uint32_t, S>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  SparseVector(std::size_t dim, std::vector<Entry> entries) : dim_(dim), entries_(std::move(entries)) {}

  static SparseVector unit(std::size_t dim, uint32_t k, S value = S(1)) {
    SparseVector v(dim);
    if (!value.is_zero()) v.entries_.emplace_back(k, std::move(value));
    return v;
  }
  static SparseVector from_dense(const Vec<S>& d) {
    SparseVector v(d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
      if (!d[k].is_zero()) v.entries_.emplace_back(static_cast<uint32_t>(k), d[k]);
    return v;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::vector<Entry>& mutable_entries() noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Appends an entry; indices must be strictly increasing.
  void push(uint32_t k, S value) {
    if (!value.is_zero()) entries_.emplace_back(k, std::move(value));
  }

  S get(uint32_t k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, uint32_t key) { return e.first < key; });
    if (it != entries_.end() && it->first == k) return it->second;
    return S();
  }

  Vec<S> to_dense() const {
    Vec<S> d(dim_);
    for (const auto& [k, v] : entries_) d[k] = v;
    return d;
  }

  SparseVector scaled(const S& a) const {
    SparseVector r(dim_);
    if (a.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& [k, v] : entries_) r.entries_.emplace_back(k, v * a);
    return r;
  }

  /// Returns this + a·x.
  SparseVector plus_scaled(const S& a, const SparseVector& x) const {
    if (x.dim_ != dim_) throw DimensionMismatch("SparseVector::plus_scaled");
    SparseVector r(dim_);
    r.entries_.reserve(entries_.size() + x.entries_.size());
    auto i = entries_.begin();
    auto j = x.entries_.begin();
    while (i != entries_.end() || j != x.entries_.end()) {
      if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
        r.entries_.push_back(*i++);
      } else if (i == entries_.end() || j->first < i->first) {
        r.push(j->first, a * j->second);
        ++j;
      } else {
        S s = i->second + a * j->second;
        r.push(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  SparseVector operator+(const SparseVector& o) const { return plus_scaled(S(1), o); }
  SparseVector operator-(const SparseVector& o) const { return plus_scaled(S(-1), o); }
  SparseVector operator-() const { return scaled(S(-1)); }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Dense accumulator that scatters additions and gathers a sorted sparse result.
template <class S>
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim), touched_flag_(dim, 0) {}

  std::size_t dim() const noexcept { return values_.size(); }

  void add(uint32_t k, const S& v) {
    if (!touched_flag_[k]) {
      touched_flag_[k] = 1;
      touched_.push_back(k);
      values_[k] = v;
    } else {
      values_[k] += v;
    }
  }
  void add_scaled(const S& a, const SparseVector<S>& x) {
    for (const auto& [k, v] : x) add(k, a * v);
  }

  /// Moves the accumulated sum out and resets.
  SparseVector<S> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVector<S> r(values_.size());
    for (uint32_t k : touched_) {
      if (!values_[k].is_zero()) r.push(k, std::move(values_[k]));
      values_[k] = S();
      touched_flag_[k] = 0;
    }
    touched_.clear();
    return r;
  }

 private:
  std::vector<S> values_;
  std::vector<char> touched_flag_;
  std::vector<uint32_t> touched_;
};

/// Dense row-major matrix with explicit dimensions.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = S(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DimensionMismatch("Matrix::from_rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<S> row(std::size_t r) const { return Vec<S>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec<S> col(std::size_t c) const {
    Vec<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("Matrix product");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& a = (*this)(r, k);
        if (a.is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          const S& b = o(k, c);
          if (!b.is_zero()) p(r, c) += a * b;
        }
      }
    return p;
  }

  Vec<S> operator*(const Vec<S>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("Matrix-vector product");
    Vec<S> w(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const S& a = (*this)(r, c);
        if (!a.is_zero() && !v[c].is_zero()) w[r] += a * v[c];
      }
    return w;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
    return s;
  }
  Matrix scaled(const S& a) const {
    Matrix s = *this;
    for (auto& x : s.data_) x *= a;
    return s;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix shape");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

/// Sparse matrix stored as sparse rows.
template <class S>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, SparseVector<S>(cols)) {}

  static SparseMatrix identity(std::size_t n, S value = S(1)) {
    SparseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.rows_[k].push(static_cast<uint32_t>(k), value);
    return m;
  }
  static SparseMatrix from_dense(const Matrix<S>& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r) m.rows_[r] = SparseVector<S>::from_dense(d.row(r));
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVector<S>& row(std::size_t r) const { return rows_[r]; }
  SparseVector<S>& mutable_row(std::size_t r) { return rows_[r]; }
  void set_row(std::size_t r, SparseVector<S> v) {
    if (v.dim() != cols_) throw DimensionMismatch("SparseMatrix::set_row");
    rows_[r] = std::move(v);
  }
  S get(std::size_t r, std::size_t c) const { return rows_[r].get(static_cast<uint32_t>(c)); }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.nnz();
    return n;
  }
  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.is_zero()) return false;
    return true;
  }

  Matrix<S> to_dense() const {
    Matrix<S> d(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) d(r, c) = v;
    return d;
  }

  SparseMatrix operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows()) throw DimensionMismatch("SparseMatrix product");
    SparseMatrix p(rows(), o.cols_);
    Accumulator<S> acc(o.cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [k, a] : rows_[r]) acc.add_scaled(a, o.rows_[k]);
      p.rows_[r] = acc.take();
    }
    return p;
  }

  SparseMatrix operator+(const SparseMatrix& o) const { return plus_scaled(S(1), o); }
  SparseMatrix operator-(const SparseMatrix& o) const { return plus_scaled(S(-1), o); }
  SparseMatrix plus_scaled(const S& a, const SparseMatrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw DimensionMismatch("SparseMatrix shape");
    SparseMatrix s(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r) s.rows_[r] = rows_[r].plus_scaled(a, o.rows_[r]);
    return s;
  }
  SparseMatrix scaled(const S& a) const {
    SparseMatrix s(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r) s.rows_[r] = rows_[r].scaled(a);
    return s;
  }

  Vec<S> operator*(const Vec<S>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("SparseMatrix-vector product");
    Vec<S> w(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, a] : rows_[r])
        if (!v[c].is_zero()) w[r] += a * v[c];
    return w;
  }
  SparseVector<S> apply(const SparseVector<S>& v) const {
    if (v.dim() != cols_) throw DimensionMismatch("SparseMatrix apply");
    Vec<S> dense = v.to_dense();
    SparseVector<S> w(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      S s;
      for (const auto& [c, a] : rows_[r])
        if (!dense[c].is_zero()) s += a * dense[c];
      w.push(static_cast<uint32_t>(r), std::move(s));
    }
    return w;
  }

  SparseMatrix transpose() const {
    std::vector<std::vector<typename SparseVector<S>::Entry>> cols(cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, a] : rows_[r]) cols[c].emplace_back(static_cast<uint32_t>(r), a);
    SparseMatrix t(cols_, rows());
    for (std::size_t c = 0; c < cols_; ++c) t.rows_[c] = SparseVector<S>(rows(), std::move(cols[c]));
    return t;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector<S>> rows_;
};

template <class S>
SparseMatrix<S> kronecker(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  SparseMatrix<S> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t p = 0; p < b.rows(); ++p) {
      SparseVector<S> row(k.cols());
      for (const auto& [j, x] : a.row(i))
        for (const auto& [q, y] : b.row(p)) row.push(static_cast<uint32_t>(j * b.cols() + q), x * y);
      k.set_row(i * b.rows() + p, std::move(row));
    }
  return k;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    S inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || m(q, c).is_zero()) continue;
      S f = m(q, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(q, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
  return rref(m).size();
}

/// Basis of the null space {x : m x = 0}.
template <class S>
std::vector<Vec<S>> kernel(const Matrix<S>& m) {
  Matrix<S> a = m;
  auto pivots = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vec<S>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(a.cols());
    v[free] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!a(r, free).is_zero()) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = rhs exactly; std::nullopt when inconsistent.
template <class S>
std::optional<Vec<S>> solve_linear(const Matrix<S>& a, const Vec<S>& rhs) {
  if (rhs.size() != a.rows()) throw DimensionMismatch("solve_linear");
  Matrix<S> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = rhs[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <class S>
Vec<S> solve_linear_or_throw(const Matrix<S>& a, const Vec<S>& rhs) {
  auto x = solve_linear(a, rhs);
  if (!x) throw NoSolution();
  return *x;
}

/// Incrementally maintained fully reduced echelon basis of dense vectors.
template <class S>
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == dim_; }
  const std::vector<Vec<S>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the basis in place.
  void reduce(Vec<S>& v) const {
    if (v.size() != dim_) throw DimensionMismatch("Echelon::reduce");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const S& f = v[pivots_[r]];
      if (f.is_zero()) continue;
      S c = f;
      const Vec<S>& row = rows_[r];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!row[k].is_zero()) v[k] -= c * row[k];
    }
  }

  bool contains(Vec<S> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  /// Adds v; returns true iff the rank increased.
  bool insert(Vec<S> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    S inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      S f = row[p];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!v[k].is_zero()) row[k] -= f * v[k];
    }
    pivot_row_[p] = static_cast<long>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  /// Basis of the annihilator {x : row·x = 0 for every stored row}.
  std::vector<Vec<S>> complement_kernel() const {
    std::vector<Vec<S>> basis;
    for (std::size_t free = 0; free < dim_; ++free) {
      if (pivot_row_[free] >= 0) continue;
      Vec<S> v(dim_);
      v[free] = S(1);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!rows_[r][free].is_zero()) v[pivots_[r]] = -rows_[r][free];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t dim_;
  std::vector<Vec<S>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

/// Forward (leading-index) elimination over sparse vectors that records, for
/// every rejected vector, its coordinates in terms of the previously accepted
/// ones. Acceptance order is insertion order.
template <class S>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVector<S>>& originals() const noexcept { return originals_; }

  struct Result {
    bool accepted;
    std::size_t index;              // index of the accepted vector when accepted
    SparseVector<S> coordinates;    // coordinates over accepted vectors otherwise
  };

  Result insert(const SparseVector<S>& v) {
    if (v.dim() != dim_) throw DimensionMismatch("SparseEchelon::insert");
    SparseVector<S> w = v;
    SparseVector<S> combo(kMaxRank);
    while (!w.is_zero()) {
      uint32_t lead = w.entries().front().first;
      auto it = lead_to_row_.find(lead);
      if (it == lead_to_row_.end()) break;
      const Row& row = rows_[it->second];
      S f = w.entries().front().second;
      w = w.plus_scaled(-f, row.vec);
      combo = combo.plus_scaled(f, row.combo);
    }
    if (w.is_zero()) return {false, 0, std::move(combo)};
    std::size_t idx = originals_.size();
    S inv = w.entries().front().second.inverse();
    combo = combo.plus_scaled(S(-1), SparseVector<S>::unit(kMaxRank, static_cast<uint32_t>(idx)));
    // w = v - Σ (combo over accepted) ; normalized row r = inv·w, with
    // expression inv·(e_idx - combo).
    Row row{w.scaled(inv), combo.scaled(-inv)};
    lead_to_row_.emplace(row.vec.entries().front().first, rows_.size());
    rows_.push_back(std::move(row));
    originals_.push_back(v);
    return {true, idx, SparseVector<S>(kMaxRank)};
  }

  static constexpr std::size_t kMaxRank = 1u << 20;

 private:
  struct Row {
    SparseVector<S> vec;
    SparseVector<S> combo;
  };
  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<SparseVector<S>> originals_;
  std::unordered_map<uint32_t, std::size_t> lead_to_row_;
};

}  // namespace kantor
