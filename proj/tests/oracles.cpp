#include "oracles.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

using instanton::LaurentZU;
using instanton::Rat;

namespace oracle {

std::size_t sparse_rank(std::vector<Row> rows) {
  std::map<std::size_t, Row> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto [col, lead] = *row.begin();
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        pivots.emplace(col, row);
        break;
      }
      const Rat f = lead / it->second.at(col);
      for (const auto& [k, v] : it->second) {
        Rat& x = row[k];
        x -= f * v;
        if (x == 0) row.erase(k);
      }
    }
  }
  return pivots.size();
}

namespace {

int section_dim(int j, const LaurentZU& p, int lowest, int max_degree) {
  const int lmax = std::max(p.max_z_degree().value_or(0), 0);
  std::map<std::tuple<char, int, int>, std::size_t> var;
  for (int m = lowest; m <= max_degree; ++m) {
    for (int k = 0; k <= m + j; ++k) var.emplace(std::make_tuple('b', m, k), var.size());
    for (int k = 0; k <= m + lmax + j; ++k) var.emplace(std::make_tuple('a', m, k), var.size());
  }
  std::map<std::pair<int, int>, Row> cons;
  for (const auto& [key, v] : var) {
    const auto [t, m, k] = key;
    if (t == 'a') {
      if (k + j > m) cons[{k + j, m}][v] += 1;
      continue;
    }
    for (const auto& [e, c] : p.terms()) {
      if (k + e.z > m + e.u) cons[{k + e.z, m + e.u}][v] += c;
    }
  }
  std::vector<Row> rows;
  for (auto& [key, row] : cons) {
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    rows.push_back(std::move(row));
  }
  return static_cast<int>(var.size() - sparse_rank(std::move(rows)));
}

}  // namespace

int hull_width(int j, const LaurentZU& p, int max_degree) {
  return section_dim(j, p, -j - 5, max_degree) - section_dim(j, p, 0, max_degree);
}

int cech_height(int j, const LaurentZU& p) {
  const int top = j + 1;
  int zmin = 0, zmax = 0;
  for (const auto& [e, c] : p.terms()) {
    zmin = std::min(zmin, e.z);
    zmax = std::max(zmax, e.z);
  }
  const int bound = 3 * j + 4 + zmax - zmin;
  auto target = [&](int comp, int m, int k) -> std::optional<std::size_t> {
    if (m < 0 || m > top || k < -bound || k > bound) return std::nullopt;
    return static_cast<std::size_t>(((comp * (top + 1)) + m) * (2 * bound + 1) + (k + bound));
  };
  const std::size_t box = static_cast<std::size_t>(2 * (top + 1) * (2 * bound + 1));
  std::vector<Row> rows;
  auto push = [&](Row row) {
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    if (!row.empty()) rows.push_back(std::move(row));
  };
  for (int m = 0; m <= top; ++m) {
    for (int comp = 0; comp < 2; ++comp) {
      for (int k = -bound; k <= m; ++k) push(Row{{*target(comp, m, k), Rat(1)}});
    }
    for (int k = 0; k <= 2 * bound + j; ++k) {
      if (auto t = target(0, m, k + j)) push(Row{{*t, Rat(1)}});
      Row row;
      if (auto t = target(1, m, k - j)) row[*t] += 1;
      for (const auto& [e, c] : p.terms()) {
        if (auto t = target(0, m + e.u, k + e.z)) row[*t] += c;
      }
      push(std::move(row));
    }
  }
  return static_cast<int>(box - sparse_rank(std::move(rows)));
}

}  // namespace oracle
