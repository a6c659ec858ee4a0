#include "levelcert/linalg.hpp"

namespace levelcert {

bool Echelon::reduce(KVector& v) const {
  bool zero = true;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto c = v[pivots_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    auto nc = field_.neg(c);
    for (int k = pivots_[r]; k < dim_; ++k) {
      if (row[k]) v[k] = field_.add(v[k], field_.mul(nc, row[k]));
    }
  }
  for (auto x : v) {
    if (x) {
      zero = false;
      break;
    }
  }
  return zero;
}

bool Echelon::insert(KVector v) {
  if (reduce(v)) return false;
  int p = 0;
  while (v[p] == 0) ++p;
  auto inv = field_.inv(v[p]);
  for (int k = p; k < dim_; ++k) v[k] = field_.mul(v[k], inv);
  // keep the basis fully reduced
  for (auto& row : rows_) {
    auto c = row[p];
    if (!c) continue;
    auto nc = field_.neg(c);
    for (int k = p; k < dim_; ++k) {
      if (v[k]) row[k] = field_.add(row[k], field_.mul(nc, v[k]));
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

namespace {

// Gauss-Jordan on [m | extra columns]; returns pivot column per pivot row.
std::vector<int> eliminate(DenseMatrix& m, const PrimeField& f, int pivot_cols, bool reverse,
                           const CancelToken* cancel) {
  std::vector<int> pivots;
  int row = 0;
  for (int step = 0; step < pivot_cols && row < m.rows; ++step) {
    if ((step & 63) == 0) poll(cancel);
    int col = reverse ? pivot_cols - 1 - step : step;
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(sel, k), m.at(row, k));
    }
    auto inv = f.inv(m.at(row, col));
    for (int k = 0; k < m.cols; ++k) m.at(row, k) = f.mul(m.at(row, k), inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      auto c = m.at(r, col);
      if (!c) continue;
      auto nc = f.neg(c);
      for (int k = 0; k < m.cols; ++k) {
        if (m.at(row, k)) m.at(r, k) = f.add(m.at(r, k), f.mul(nc, m.at(row, k)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(DenseMatrix m, const PrimeField& field) {
  return static_cast<int>(eliminate(m, field, m.cols, false, nullptr).size());
}

std::vector<KVector> nullspace(DenseMatrix m, const PrimeField& field) {
  auto pivots = eliminate(m, field, m.cols, false, nullptr);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<KVector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    KVector v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<KVector> solve(DenseMatrix m, KVector b, const PrimeField& field, bool reverse_pivots,
                             const CancelToken* cancel) {
  DenseMatrix aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  auto pivots = eliminate(aug, field, m.cols, reverse_pivots, cancel);
  for (int r = static_cast<int>(pivots.size()); r < aug.rows; ++r) {
    if (aug.at(r, m.cols)) return std::nullopt;
  }
  KVector x(m.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

}  // namespace levelcert
