#include "instanton/jets.hpp"

#include <optional>

#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"

namespace instanton {
namespace {

std::size_t monomial_index(int x_exp, int y_exp) {
  const auto d = static_cast<std::size_t>(x_exp + y_exp);
  return d * (d + 1) / 2 + static_cast<std::size_t>(y_exp);
}

std::size_t monomial_count(int max_degree) {
  const auto n = static_cast<std::size_t>(max_degree + 1);
  return n * (n + 1) / 2;
}

int vector_order(const PolyVector& v) {
  int ord = -1;
  for (const auto& f : v) {
    if (f.is_zero()) continue;
    ord = ord < 0 ? f.order() : std::min(ord, f.order());
  }
  return ord;
}

// dim R^rank / (N + m^(K+1) R^rank)
std::size_t truncated_quotient_dim(const std::vector<PolyVector>& gens,
                                   const std::vector<int>& orders, std::size_t rank, int K) {
  const std::size_t block = monomial_count(K);
  EchelonSpan span;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (orders[g] < 0 || orders[g] > K) continue;
    const int room = K - orders[g];
    for (int s = 0; s <= room; ++s) {
      for (int b = 0; b <= s; ++b) {
        const int a = s - b;
        std::vector<std::pair<std::size_t, Rat>> entries;
        for (std::size_t e = 0; e < rank; ++e) {
          for (const auto& [mono, c] : gens[g][e].terms()) {
            if (mono.degree() + s > K) break;
            entries.emplace_back(e * block + monomial_index(mono.x + a, mono.y + b), c);
          }
        }
        span.insert(make_sparse(std::move(entries)));
      }
    }
  }
  return rank * block - span.dimension();
}

}  // namespace

ColengthResult module_colength(const std::vector<PolyVector>& gens, std::size_t rank, int hard_cap,
                               int stable_steps) {
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("generator has wrong rank");
  }
  std::vector<int> orders;
  orders.reserve(gens.size());
  for (const auto& g : gens) orders.push_back(vector_order(g));

  std::optional<std::size_t> previous;
  int equal_steps = 0;
  for (int K = 0; K <= hard_cap; ++K) {
    const std::size_t d = truncated_quotient_dim(gens, orders, rank, K);
    if (previous && *previous == d) {
      if (++equal_steps >= stable_steps) {
        return ColengthResult{static_cast<int>(d), K - stable_steps};
      }
    } else {
      equal_steps = 0;
    }
    previous = d;
  }
  throw CertificationError("colength did not stabilize by truncation degree " +
                           std::to_string(hard_cap));
}

}  // namespace instanton
