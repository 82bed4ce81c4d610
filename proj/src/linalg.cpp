#include "instanton/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace instanton {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

QMatrix QMatrix::transposed() const {
  QMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& vec) const {
  if (vec.size() != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!is_zero(at(r, c))) out[r] += at(r, c) * vec[c];
    }
  }
  return out;
}

RrefResult rref_rank_kernel(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && is_zero(a.at(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(pivot, k), a.at(lead_row, k));
    }
    const Rat inv = 1 / a.at(lead_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a.at(lead_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || is_zero(a.at(r, c))) continue;
      const Rat f = a.at(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        if (!is_zero(a.at(lead_row, k))) a.at(r, k) -= f * a.at(lead_row, k);
      }
    }
    res.pivot_columns.push_back(c);
    ++lead_row;
  }
  res.rank = res.pivot_columns.size();

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : res.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < res.rank; ++r) v[res.pivot_columns[r]] = -a.at(r, f);
    res.kernel_basis.push_back(std::move(v));
  }
  return res;
}

SparseVec make_sparse(std::vector<std::pair<std::size_t, Rat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& [idx, val] : entries) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second += val;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(val)) {
      out.emplace_back(idx, std::move(val));
    }
  }
  return out;
}

SparseVec axpy(const SparseVec& a, const Rat& factor, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Rat v = ia->second + factor * ib->second;
      if (!is_zero(v)) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

namespace {

// Sweeps `work` downward from index end - 1, clearing every entry that sits on a
// pivot of a normalized row (pivot value 1). Returns the first nonzero entry
// without a pivot, or nullopt when `work` becomes zero.
template <class RowAt>
std::optional<std::size_t> sweep(std::vector<Rat>& work, std::size_t end,
                                 const std::unordered_map<std::size_t, std::size_t>& pivot_row,
                                 RowAt row_at, std::vector<Rat>* combo) {
  for (std::size_t i = end; i-- > 0;) {
    if (is_zero(work[i])) continue;
    auto it = pivot_row.find(i);
    if (it == pivot_row.end()) return i;
    const Rat f = work[i];
    const auto& [vec, row_combo] = row_at(it->second);
    for (const auto& [k, c] : *vec) work[k] -= f * c;
    if (combo) {
      for (const auto& [k, c] : *row_combo) (*combo)[k] -= f * c;
    }
  }
  return std::nullopt;
}

// Moves `v` into the zeroed workspace `dense`, growing it as needed.
void scatter(SparseVec v, std::vector<Rat>& dense) {
  if (!v.empty() && dense.size() <= v.back().first) dense.resize(v.back().first + 1);
  for (auto& [i, c] : v) dense[i] = std::move(c);
}

// Reads entries [0, top] times `scale` and zeroes them. Entries above `top`
// are already zero after a sweep.
SparseVec gather(std::vector<Rat>& dense, std::size_t top, const Rat& scale) {
  SparseVec out;
  for (std::size_t k = 0; k <= top && k < dense.size(); ++k) {
    if (is_zero(dense[k])) continue;
    out.emplace_back(k, dense[k] * scale);
    dense[k] = 0;
  }
  return out;
}

}  // namespace

SparseVec EchelonSpan::reduce(SparseVec v) const {
  if (v.empty()) return v;
  const std::size_t end = v.back().first + 1;
  scatter(std::move(v), work_);
  auto row_at = [this](std::size_t r) {
    return std::pair<const SparseVec*, const SparseVec*>{&rows_[r], nullptr};
  };
  const auto lead = sweep(work_, end, pivot_row_, row_at, nullptr);
  return lead ? gather(work_, *lead, Rat(1)) : SparseVec{};
}

bool EchelonSpan::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rat inv = 1 / v.back().second;
  for (auto& entry : v) entry.second *= inv;
  pivot_row_.emplace(v.back().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::optional<SparseVec> ColumnEliminator::add_column(SparseVec col) {
  const std::size_t index = next_column_++;
  if (combo_.size() <= index) combo_.resize(index + 1);
  combo_[index] = 1;
  const std::size_t end = col.empty() ? 0 : col.back().first + 1;
  scatter(std::move(col), work_);
  auto row_at = [this](std::size_t r) {
    return std::pair<const SparseVec*, const SparseVec*>{&rows_[r].vec, &rows_[r].combo};
  };
  const auto lead = sweep(work_, end, pivot_row_, row_at, &combo_);
  if (!lead) return gather(combo_, index, Rat(1));
  const Rat inv = 1 / work_[*lead];
  pivot_row_.emplace(*lead, rows_.size());
  SparseVec vec = gather(work_, *lead, inv);
  rows_.push_back(Row{std::move(vec), gather(combo_, index, inv)});
  return std::nullopt;
}

}  // namespace instanton
