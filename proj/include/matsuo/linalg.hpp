#ifndef MATSUO_LINALG_HPP
#define MATSUO_LINALG_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "matsuo/field.hpp"

namespace matsuo {

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// Sorted by column, no explicit zeros.
template <class S>
using SparseRow = std::vector<std::pair<int, S>>;

template <class S>
SparseRow<S> normalize_row(SparseRow<S> row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseRow<S> out;
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
    } else {
      out.emplace_back(c, std::move(v));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }),
            out.end());
  return out;
}

// Homogeneous linear constraints over a fixed number of unknowns.
template <class S>
class SparseSystem {
 public:
  explicit SparseSystem(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const { return unknowns_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow<S>>& row_list() const { return rows_; }

  // Merges repeated columns and drops the row if it vanishes.
  void add_row(SparseRow<S> row) {
    row = normalize_row(std::move(row));
    if (!row.empty()) rows_.push_back(std::move(row));
  }
  void append(const SparseSystem& other) {
    for (const auto& r : other.rows_) rows_.push_back(r);
  }

  S evaluate(int r, const Vector<S>& x) const {
    S acc(0);
    for (const auto& [c, v] : rows_[r]) acc += v * x[c];
    return acc;
  }
  bool satisfied_by(const Vector<S>& x) const {
    for (int r = 0; r < rows(); ++r) {
      if (!evaluate(r, x).is_zero()) return false;
    }
    return true;
  }

 private:
  int unknowns_;
  std::vector<SparseRow<S>> rows_;
};

template <class S>
struct Nullspace {
  int rank = 0;
  std::vector<Vector<S>> basis;
};

namespace detail {

// a - f * b on sorted sparse rows.
template <class S>
SparseRow<S> axpy_row(const SparseRow<S>& a, const S& f, const SparseRow<S>& b) {
  SparseRow<S> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      S v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class S>
const S* find_entry(const SparseRow<S>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace detail

// Exact sparse elimination. The pivot row is the active row of fewest
// entries, and within it the column occurring in the fewest active rows.
// Pivots are eliminated from active rows only; the nullspace is recovered by
// back substitution in reverse pivot order.
template <class S>
Nullspace<S> sparse_nullspace(const SparseSystem<S>& system, bool want_basis = true) {
  const int n = system.unknowns();
  std::vector<SparseRow<S>> rows = system.row_list();
  const int m = static_cast<int>(rows.size());

  // Column lists may hold stale row ids; they are filtered when used.
  std::vector<std::vector<int>> col_rows(n);
  std::vector<int> col_count(n, 0);
  for (int r = 0; r < m; ++r) {
    for (const auto& e : rows[r]) {
      col_rows[e.first].push_back(r);
      ++col_count[e.first];
    }
  }
  std::vector<char> active(m, 1);
  std::set<std::pair<std::size_t, int>> queue;
  for (int r = 0; r < m; ++r) queue.emplace(rows[r].size(), r);

  std::vector<int> pivot_col;
  std::vector<int> pivot_row;
  std::vector<char> is_pivot(n, 0);

  while (!queue.empty()) {
    auto [size, r] = *queue.begin();
    queue.erase(queue.begin());
    active[r] = 0;
    if (size == 0) continue;
    SparseRow<S>& row = rows[r];
    for (const auto& e : row) --col_count[e.first];

    int col = row.front().first;
    for (const auto& e : row) {
      if (col_count[e.first] < col_count[col]) col = e.first;
    }
    S inv = detail::find_entry(row, col)->inverse();
    for (auto& e : row) e.second *= inv;

    std::vector<int>& list = col_rows[col];
    std::vector<int> targets;
    for (int t : list) {
      if (t != r && active[t] && detail::find_entry(rows[t], col)) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    list.clear();
    for (int t : targets) {
      queue.erase({rows[t].size(), t});
      for (const auto& e : rows[t]) --col_count[e.first];
      S f = *detail::find_entry(rows[t], col);
      SparseRow<S> next = detail::axpy_row(rows[t], f, row);
      for (const auto& e : next) {
        ++col_count[e.first];
        if (!detail::find_entry(rows[t], e.first)) col_rows[e.first].push_back(t);
      }
      rows[t] = std::move(next);
      queue.emplace(rows[t].size(), t);
    }
    pivot_col.push_back(col);
    pivot_row.push_back(r);
    is_pivot[col] = 1;
  }

  Nullspace<S> out;
  out.rank = static_cast<int>(pivot_col.size());
  if (!want_basis) return out;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> x = Vector<S>::Zero(n);
    x[f] = S(1);
    for (int k = out.rank - 1; k >= 0; --k) {
      S acc(0);
      for (const auto& [c, v] : rows[pivot_row[k]]) {
        if (c != pivot_col[k] && !x[c].is_zero()) acc += v * x[c];
      }
      x[pivot_col[k]] = -acc;
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

template <class S>
int sparse_rank(const SparseSystem<S>& system) {
  return sparse_nullspace(system, false).rank;
}

// --- dense helpers ----------------------------------------------------------

// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<int> rref(Matrix<S>& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    a.row(p).swap(a.row(r));
    S inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      S f = a(i, c);
      for (int j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
int rank(Matrix<S> a) {
  return static_cast<int>(rref(a).size());
}

// Columns form a basis of {x : a x = 0}.
template <class S>
Matrix<S> kernel(Matrix<S> a) {
  std::vector<int> pivots = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix<S> k = Matrix<S>::Zero(a.cols(), a.cols() - static_cast<int>(pivots.size()));
  int col = 0;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = S(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], col) = -a(static_cast<int>(i), f);
    ++col;
  }
  return k;
}

// Inverse of a square matrix, or nullopt when singular.
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  const int n = static_cast<int>(a.rows());
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Matrix<S>::Identity(n, n);
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return Matrix<S>(aug.rightCols(n));
}

template <class S>
bool is_zero(const Matrix<S>& a) {
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class S>
bool is_zero(const Vector<S>& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return false;
  }
  return true;
}

}  // namespace matsuo

#endif  // MATSUO_LINALG_HPP
