#include "instanton/curve.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "instanton/errors.hpp"
#include "instanton/field_tower.hpp"
#include "instanton/jets.hpp"
#include "instanton/poly_format.hpp"

namespace instanton {

int multiplicity(const PlanePoly& g) {
  if (g.is_zero()) throw ValidationError("zero polynomial has no multiplicity");
  if (!is_zero(g.constant_term())) throw ValidationError("curve does not pass through origin");
  return g.order();
}

int default_jet_cap(const std::vector<PlanePoly>& gens) {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return 2 * d * d + 10;
}

int jet_colength(const std::vector<PlanePoly>& gens, int hard_cap) {
  if (hard_cap < 0) hard_cap = default_jet_cap(gens);
  std::vector<PolyVector> vecs;
  vecs.reserve(gens.size());
  for (const auto& g : gens) vecs.push_back(PolyVector{g});
  try {
    return module_colength(vecs, 1, hard_cap, 1).colength;
  } catch (const CertificationError&) {
    throw SingularityError("non-isolated singularity or cap too small");
  }
}

MilnorTjurina milnor_tjurina(const PlanePoly& g) {
  const PlanePoly gx = g.d_dx();
  const PlanePoly gy = g.d_dy();
  MilnorTjurina out;
  out.milnor = jet_colength({gx, gy});
  out.tjurina = jet_colength({g, gx, gy}, default_jet_cap({gx, gy}));
  return out;
}

// ---------------------------------------------------------------------------
// Reducedness: gcd(g, g_x, g_y) in Q[x][y] by primitive remainder sequences.

namespace {

using UPoly = std::vector<Rat>;  // in x, low to high
using BPoly = std::vector<UPoly>;  // in y, coefficients in Q[x]

void trim(UPoly& a) {
  while (!a.empty() && is_zero(a.back())) a.pop_back();
}

void trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  trim(out);
  return out;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero");
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rat f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly umonic(UPoly a) {
  if (a.empty()) return a;
  const Rat lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

UPoly content(const BPoly& a) {
  UPoly c;
  for (const auto& coeff : a) c = ugcd(c, coeff);
  return c;
}

BPoly primitive_part(const BPoly& a) {
  const UPoly c = content(a);
  BPoly out;
  for (const auto& coeff : a) out.push_back(udivmod(coeff, c).first);
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b
BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const UPoly la = a.back();
    for (auto& coeff : a) coeff = umul(coeff, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = usub(a[shift + i], umul(la, b[i]));
    trim(a);
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return b.empty() ? b : primitive_part(b);
  if (b.empty()) return primitive_part(a);
  const UPoly c = ugcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive_part(r);
  }
  for (auto& coeff : a) coeff = umul(coeff, c);
  return a;
}

BPoly to_bpoly(const PlanePoly& g) {
  BPoly out;
  for (const auto& [e, c] : g.terms()) {
    if (out.size() <= static_cast<std::size_t>(e.y)) out.resize(static_cast<std::size_t>(e.y) + 1);
    UPoly& coeff = out[static_cast<std::size_t>(e.y)];
    if (coeff.size() <= static_cast<std::size_t>(e.x)) coeff.resize(static_cast<std::size_t>(e.x) + 1);
    coeff[static_cast<std::size_t>(e.x)] = c;
  }
  return out;
}

}  // namespace

bool reducedness_check(const PlanePoly& g) {
  if (g.is_zero()) return false;
  const BPoly d = bgcd(bgcd(to_bpoly(g), to_bpoly(g.d_dx())), to_bpoly(g.d_dy()));
  return d.size() <= 1 && (d.empty() || d[0].size() <= 1);
}

// ---------------------------------------------------------------------------
// Resolution by point blow-ups over a dynamic field tower.

namespace {

using TowerGerm = std::map<XYExponent, TowerElem>;

TowerGerm lift_germ(const Tower& tower, const TowerGerm& g) {
  TowerGerm out;
  for (const auto& [e, c] : g) out.emplace(e, tower.lift(c));
  return out;
}

TowerGerm reduce_germ(const Tower& tower, const TowerGerm& g) {
  TowerGerm out;
  for (const auto& [e, c] : g) out.emplace(e, tower.reduce(c));
  return out;
}

// Drops coefficients that vanish in the tower; may throw TowerSplit.
TowerGerm normalized(const Tower& tower, const TowerGerm& g) {
  TowerGerm out;
  for (const auto& [e, c] : g) {
    if (!tower.is_zero(c)) out.emplace(e, c);
  }
  return out;
}

void add_to(const Tower& tower, TowerGerm& g, XYExponent e, const TowerElem& c) {
  auto [it, inserted] = g.try_emplace(e, c);
  if (!inserted) it->second = tower.add(it->second, c);
}

Rat binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

// g(x, x (y + c)) / x^m
TowerGerm chart_one(const Tower& tower, const TowerGerm& g, const TowerElem& c, int m) {
  TowerGerm out;
  for (const auto& [e, coeff] : g) {
    for (int r = 0; r <= e.y; ++r) {
      const TowerElem term =
          tower.mul(coeff, tower.scale(tower.pow(c, static_cast<unsigned>(e.y - r)), binomial(e.y, r)));
      add_to(tower, out, XYExponent{e.x + e.y - m, r}, term);
    }
  }
  return out;
}

// g(x y, y) / y^m
TowerGerm chart_two(const TowerGerm& g, int m) {
  TowerGerm out;
  for (const auto& [e, coeff] : g) out.emplace(XYExponent{e.x, e.x + e.y - m}, coeff);
  return out;
}

std::string germ_string(const Tower& tower, const TowerGerm& g) {
  if (tower.levels() == 0) {
    std::vector<FormattedTerm> terms;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      FormattedTerm t{it->second.rational(), {}};
      if (it->first.x) t.powers.emplace_back("x", it->first.x);
      if (it->first.y) t.powers.emplace_back("y", it->first.y);
      terms.push_back(std::move(t));
    }
    return format_terms(terms);
  }
  std::string out;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + tower.to_string(it->second) + ")";
    if (it->first.x) out += "*x^" + std::to_string(it->first.x);
    if (it->first.y) out += "*y^" + std::to_string(it->first.y);
  }
  return out.empty() ? "0" : out;
}

struct Child {
  Tower tower;
  TowerGerm germ;
};

class Resolver {
 public:
  Resolver(const ResolutionOptions& options, ResolutionTree& tree) : options_(options), tree_(tree) {}

  void resolve(const Tower& tower, const TowerGerm& germ, int depth, int parent) {
    if (depth > options_.max_depth) throw CertificationError("resolution depth cap exceeded");
    int m = 0;
    TowerGerm g;
    std::vector<Child> children;
    try {
      g = normalized(tower, germ);
      if (g.empty()) throw SingularityError("curve not reduced");
      m = g.begin()->first.degree();
      if (m > 1) children = blow_up(tower, g, m);
    } catch (const TowerSplit& split) {
      for (std::size_t i = 0; i < 2; ++i) {
        const Tower branch = tower.branch(split, i);
        resolve(branch, reduce_germ(branch, germ), depth, parent);
      }
      return;
    }
    const std::size_t orbit = tower.degree_over_q();
    ResolutionNode node;
    node.depth = depth;
    node.parent = parent;
    node.orbit_degree = orbit;
    node.tower_levels = tower.nontrivial_levels();
    node.multiplicity = m;
    node.germ = germ_string(tower, g);
    const int index = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back(std::move(node));
    if (m == 1) {
      tree_.branches += static_cast<int>(orbit);
      return;
    }
    tree_.delta += static_cast<int>(orbit) * m * (m - 1) / 2;
    for (const auto& child : children) resolve(child.tower, child.germ, depth + 1, index);
  }

 private:
  std::vector<Child> blow_up(const Tower& tower, const TowerGerm& g, int m) {
    std::vector<Child> children;
    TowerPoly cone(static_cast<std::size_t>(m + 1), tower.zero());
    for (const auto& [e, c] : g) {
      if (e.degree() != m) break;
      cone[static_cast<std::size_t>(e.y)] = c;
    }
    const TowerPoly directions = tower.poly_squarefree_part(cone);
    const int count = tower.poly_degree(directions);
    if (count == 1) {
      children.push_back(Child{tower, chart_one(tower, g, tower.neg(directions[0]), m)});
    } else if (count > 1) {
      const Tower ext = tower.extend(directions);
      if (ext.nontrivial_levels() > options_.max_tower_levels) {
        throw UnsupportedTowerError("unsupported field tower");
      }
      children.push_back(Child{ext, chart_one(ext, lift_germ(ext, g), ext.generator(), m)});
    }
    if (tower.is_zero(cone[static_cast<std::size_t>(m)])) children.push_back(Child{tower, chart_two(g, m)});
    return children;
  }

  const ResolutionOptions& options_;
  ResolutionTree& tree_;
};

}  // namespace

ResolutionTree delta_and_branches(const PlanePoly& g, const ResolutionOptions& options) {
  multiplicity(g);
  if (!reducedness_check(g)) throw SingularityError("curve not reduced");
  ResolutionTree tree;
  TowerGerm germ;
  for (const auto& [e, c] : g.terms()) germ.emplace(e, TowerElem(c));
  Resolver(options, tree).resolve(Tower(), germ, 0, -1);
  return tree;
}

CurveInvariants curve_invariants(const PlanePoly& g, const ResolutionOptions& options) {
  CurveInvariants inv;
  inv.multiplicity = multiplicity(g);
  const ResolutionTree tree = delta_and_branches(g, options);
  const MilnorTjurina mt = milnor_tjurina(g);
  inv.milnor = mt.milnor;
  inv.tjurina = mt.tjurina;
  inv.delta = tree.delta;
  inv.branches = tree.branches;
  inv.milnor_consistent = 2 * inv.delta == inv.milnor + inv.branches - 1;
  if (!inv.milnor_consistent) {
    throw CertificationError("Milnor relation 2*delta = mu + r - 1 failed");
  }
  if (inv.tjurina > inv.milnor) throw CertificationError("Tjurina number exceeds Milnor number");
  return inv;
}

}  // namespace instanton
