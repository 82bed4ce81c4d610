#include "instanton/direct_image.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "instanton/bundle.hpp"
#include "instanton/errors.hpp"

namespace instanton {

DirectImageBounds DirectImageBounds::defaults(int j) { return from_max_degree(j, 2 * j + 2); }

DirectImageBounds DirectImageBounds::from_max_degree(int j, int max_degree) {
  DirectImageBounds b;
  b.gen_bound = max_degree;
  b.rel_bound = max_degree + 2 * j + 2;
  b.coker_cap = b.rel_bound + j * j + 2;
  return b;
}

// ---------------------------------------------------------------------------
// Height

HeightProblem height_problem(int j, const LaurentZU& p) {
  validate_extension_class(j, p);
  HeightProblem hp;
  std::map<ZUExponent, std::size_t> row_of;
  for (int m = 0; m <= j - 2; ++m) {
    for (int k = m - j + 1; k <= -1; ++k) {
      row_of.emplace(ZUExponent{m, k}, hp.window.size());
      hp.window.push_back(ZUExponent{m, k});
    }
  }
  for (int m = 0; m <= j - 3; ++m) {
    for (int k = -j; k <= m; ++k) hp.sources.push_back(ZUExponent{m, k});
  }
  hp.psi = QMatrix(hp.window.size(), hp.sources.size());
  for (std::size_t col = 0; col < hp.sources.size(); ++col) {
    const ZUExponent d = hp.sources[col];
    for (const auto& [e, c] : p.terms()) {
      auto it = row_of.find(ZUExponent{d.u + e.u, d.z + e.z});
      if (it != row_of.end()) hp.psi.at(it->second, col) += c;
    }
  }
  return hp;
}

int height(int j, const LaurentZU& p) {
  const HeightProblem hp = height_problem(j, p);
  if (hp.window.empty()) return 0;
  return static_cast<int>(hp.window.size() - rref_rank_kernel(hp.psi).rank);
}

// ---------------------------------------------------------------------------
// Sections

namespace {

struct Coord {
  bool is_a;
  int m;
  int k;
};

// Coordinates of sections of u-degree <= max_degree. Every u-degree-m block
// precedes the (m+1) block, so leading indices refine the u-degree filtration.
class SectionLayout {
 public:
  SectionLayout(int j, const LaurentZU& p, int max_degree)
      : j_(j), max_degree_(max_degree), a_extra_(std::max(p.max_z_degree().value_or(0), 0)) {
    for (int m = 0; m <= max_degree_; ++m) {
      offset_.push_back(coords_.size());
      for (int k = 0; k <= a_top(m); ++k) coords_.push_back(Coord{true, m, k});
      for (int k = 0; k <= m + j_; ++k) coords_.push_back(Coord{false, m, k});
    }
  }

  std::size_t size() const { return coords_.size(); }
  const Coord& coord(std::size_t idx) const { return coords_[idx]; }
  int degree_of(std::size_t idx) const { return coords_[idx].m; }
  int max_degree() const { return max_degree_; }

  std::size_t index(const Coord& c) const {
    const std::size_t base = offset_[static_cast<std::size_t>(c.m)];
    return c.is_a ? base + static_cast<std::size_t>(c.k)
                  : base + static_cast<std::size_t>(a_top(c.m) + 1 + c.k);
  }

  // x^xa y^yb * v; the caller keeps the total degree within max_degree.
  SparseVec shift(const SparseVec& v, int xa, int yb) const {
    const int s = xa + yb;
    std::vector<std::pair<std::size_t, Rat>> out;
    out.reserve(v.size());
    for (const auto& [idx, c] : v) {
      const Coord& from = coords_[idx];
      out.emplace_back(index(Coord{from.is_a, from.m + s, from.k + yb}), c);
    }
    return make_sparse(std::move(out));
  }

  Section to_section(const SparseVec& v) const {
    Section s;
    for (const auto& [idx, c] : v) {
      const Coord& co = coords_[idx];
      (co.is_a ? s.a : s.b).add_term(c, co.k, co.m);
    }
    return s;
  }

 private:
  int a_top(int m) const { return m + a_extra_; }

  int j_;
  int max_degree_;
  int a_extra_;
  std::vector<std::size_t> offset_;
  std::vector<Coord> coords_;
};

struct FilteredBasis {
  std::vector<SparseVec> vectors;  // ordered by degree
  std::vector<int> degrees;
};

// Kernel of the holomorphy constraints on the second chart. Each kernel vector
// has its free column as leading index, so the vectors of degree <= m span
// the sections of u-degree <= m.
FilteredBasis section_basis(const SectionLayout& layout, int j, const LaurentZU& p) {
  std::map<std::pair<int, int>, std::size_t> row_of;  // (z-degree K, u-degree m), K > m
  auto row = [&row_of](int K, int m) {
    auto [it, inserted] = row_of.try_emplace({K, m}, row_of.size());
    return it->second;
  };
  ColumnEliminator elim;
  FilteredBasis basis;
  for (std::size_t idx = 0; idx < layout.size(); ++idx) {
    const Coord& c = layout.coord(idx);
    std::vector<std::pair<std::size_t, Rat>> entries;
    if (c.is_a) {
      if (c.k + j > c.m) entries.emplace_back(row(c.k + j, c.m), Rat(1));
    } else {
      for (const auto& [e, coeff] : p.terms()) {
        const int K = c.k + e.z;
        const int m = c.m + e.u;
        if (K > m) entries.emplace_back(row(K, m), coeff);
      }
    }
    if (auto kernel = elim.add_column(make_sparse(std::move(entries)))) {
      basis.vectors.push_back(std::move(*kernel));
      basis.degrees.push_back(c.m);
    }
  }
  return basis;
}

std::size_t count_up_to(const FilteredBasis& basis, int degree) {
  return static_cast<std::size_t>(
      std::upper_bound(basis.degrees.begin(), basis.degrees.end(), degree) - basis.degrees.begin());
}

struct F0Column {
  std::size_t generator;
  int xa;
  int yb;
};

bool has_full_column_rank(const std::vector<std::vector<PlanePoly>>& phi, std::size_t rels) {
  if (rels == 0) return true;
  const std::pair<long, long> points[] = {{2, 3}, {5, -7}, {-11, 13}, {17, 19}};
  for (auto [px, py] : points) {
    QMatrix m(phi.size(), rels);
    for (std::size_t g = 0; g < phi.size(); ++g) {
      for (std::size_t r = 0; r < rels; ++r) {
        Rat v = 0;
        for (const auto& [e, c] : phi[g][r].terms()) {
          mpz_class xp, yp;
          mpz_pow_ui(xp.get_mpz_t(), mpz_class(px).get_mpz_t(), static_cast<unsigned long>(e.x));
          mpz_pow_ui(yp.get_mpz_t(), mpz_class(py).get_mpz_t(), static_cast<unsigned long>(e.y));
          v += c * Rat(xp * yp);
        }
        m.at(g, r) = v;
      }
    }
    if (rref_rank_kernel(m).rank == rels) return true;
  }
  return false;
}

[[noreturn]] void fail_presentation(const std::string& detail) {
  throw CertificationError("presentation bounds too small; rerun with --max-degree (" + detail + ")");
}

}  // namespace

std::vector<std::size_t> section_space_dim(int j, const LaurentZU& p, int max_degree) {
  validate_extension_class(j, p);
  if (max_degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  const SectionLayout layout(j, p, max_degree);
  const FilteredBasis basis = section_basis(layout, j, p);
  std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree + 1), 0);
  for (int d : basis.degrees) ++dims[static_cast<std::size_t>(d)];
  return dims;
}

Presentation module_presentation(int j, const LaurentZU& p, const DirectImageBounds& bounds) {
  validate_extension_class(j, p);
  if (bounds.gen_bound < 0 || bounds.rel_bound < bounds.gen_bound) {
    throw std::invalid_argument("invalid direct-image bounds");
  }
  const SectionLayout layout(j, p, bounds.rel_bound);
  const FilteredBasis basis = section_basis(layout, j, p);

  // Generators: new classes in M_{<=m} modulo M_{<=m-1} + x M_{<=m-1} + y M_{<=m-1}.
  std::vector<SparseVec> gens;
  std::vector<int> gen_deg;
  {
    EchelonSpan span;
    std::size_t next = 0;
    for (int m = 0; m <= bounds.gen_bound; ++m) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const int s = m - gen_deg[g];
        if (s <= 0) continue;
        for (int yb = 0; yb <= s; ++yb) span.insert(layout.shift(gens[g], s - yb, yb));
      }
      for (; next < basis.vectors.size() && basis.degrees[next] == m; ++next) {
        if (span.insert(basis.vectors[next])) {
          gens.push_back(basis.vectors[next]);
          gen_deg.push_back(m);
        }
      }
    }
  }

  // Relations: minimal generators of the kernel of F0 -> M, filtered by degree.
  std::vector<F0Column> f0;
  std::map<std::tuple<std::size_t, int, int>, std::size_t> f0_index;
  std::vector<SparseVec> rels;
  std::vector<int> rel_deg;
  ColumnEliminator elim;
  EchelonSpan rel_span;
  for (int D = 0; D <= bounds.rel_bound; ++D) {
    const std::size_t first_new = f0.size();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int s = D - gen_deg[g];
      if (s < 0) continue;
      for (int yb = 0; yb <= s; ++yb) {
        f0_index.emplace(std::make_tuple(g, s - yb, yb), f0.size());
        f0.push_back(F0Column{g, s - yb, yb});
      }
    }
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const int s = D - rel_deg[r];
      if (s <= 0) continue;
      for (int yb = 0; yb <= s; ++yb) {
        std::vector<std::pair<std::size_t, Rat>> moved;
        for (const auto& [col, c] : rels[r]) {
          const F0Column& fc = f0[col];
          moved.emplace_back(f0_index.at({fc.generator, fc.xa + s - yb, fc.yb + yb}), c);
        }
        rel_span.insert(make_sparse(std::move(moved)));
      }
    }
    for (std::size_t col = first_new; col < f0.size(); ++col) {
      const F0Column& fc = f0[col];
      auto kernel = elim.add_column(layout.shift(gens[fc.generator], fc.xa, fc.yb));
      if (kernel && rel_span.insert(*kernel)) {
        rels.push_back(std::move(*kernel));
        rel_deg.push_back(D);
      }
    }
    // Hilbert check: the generators reach every section of degree <= D.
    if (elim.rank() != count_up_to(basis, D)) {
      fail_presentation("sections of u-degree " + std::to_string(D) + " not generated");
    }
  }

  if (rels.size() + 2 != gens.size()) {
    fail_presentation(std::to_string(gens.size()) + " generators but " + std::to_string(rels.size()) +
                      " relations");
  }

  Presentation pres;
  pres.generator_degrees = gen_deg;
  pres.relation_degrees = rel_deg;
  for (const auto& g : gens) pres.generators.push_back(layout.to_section(g));
  pres.phi.assign(gens.size(), std::vector<PlanePoly>(rels.size()));
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (const auto& [col, c] : rels[r]) {
      const F0Column& fc = f0[col];
      pres.phi[fc.generator][r].add_term(c, fc.xa, fc.yb);
    }
  }
  if (!has_full_column_rank(pres.phi, rels.size())) fail_presentation("relation matrix not injective");
  return pres;
}

int width_of_presentation(const Presentation& pres, const DirectImageBounds& bounds) {
  const std::size_t rels = pres.relation_degrees.size();
  if (rels == 0) return 0;
  // coker(phi^T) = R^rels / (rows of phi)
  std::vector<PolyVector> rows(pres.phi.begin(), pres.phi.end());
  try {
    return module_colength(rows, rels, bounds.coker_cap, 2).colength;
  } catch (const CertificationError&) {
    throw CertificationError("width computation failed certification");
  }
}

int width(int j, const LaurentZU& p, const DirectImageBounds& bounds) {
  return width_of_presentation(module_presentation(j, p, bounds), bounds);
}

InstantonNumbers charge_report(int j, const LaurentZU& p, const DirectImageBounds& bounds) {
  InstantonNumbers n{width(j, p, bounds), height(j, p)};
  const int k = n.charge();
  if (n.width < 1 || n.height < j - 1 || k < j || k > j * j) {
    throw CertificationError("instanton numbers (w=" + std::to_string(n.width) +
                             ", h=" + std::to_string(n.height) + ") violate the charge bounds for j=" +
                             std::to_string(j));
  }
  return n;
}

InstantonNumbers charge_report(int j, const LaurentZU& p) {
  return charge_report(j, p, DirectImageBounds::defaults(j));
}

}  // namespace instanton
