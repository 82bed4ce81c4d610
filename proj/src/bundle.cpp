#include "instanton/bundle.hpp"

#include "instanton/errors.hpp"

namespace instanton {

bool in_canonical_window(int j, int z_exp, int u_exp) {
  return u_exp >= 1 && u_exp <= 2 * j - 2 && z_exp >= u_exp - j + 1 && z_exp <= j - 1;
}

std::vector<ZUExponent> canonical_window(int j) {
  std::vector<ZUExponent> out;
  for (int i = 1; i <= 2 * j - 2; ++i) {
    for (int l = i - j + 1; l <= j - 1; ++l) out.push_back(ZUExponent{i, l});
  }
  return out;
}

std::size_t window_size(int j) {
  return j < 1 ? 0 : static_cast<std::size_t>((j - 1) * (2 * j - 1));
}

void validate_extension_class(int j, const LaurentZU& p) {
  if (j < 1) throw ValidationError("splitting type must be positive");
  if (auto lo = p.min_u_degree(); lo && *lo == 0) {
    throw ValidationError("extension class has u-degree-0 term");
  }
}

CanonicalBundle::CanonicalBundle(int j, LaurentZU p) : j_(j), p_(std::move(p)) {
  validate_extension_class(j_, p_);
  for (const auto& [e, c] : p_.terms()) {
    if (!in_canonical_window(j_, e.z, e.u)) {
      throw ValidationError("monomial z^" + std::to_string(e.z) + "*u^" + std::to_string(e.u) +
                            " lies outside the canonical window");
    }
  }
}

CanonicalBundle canonicalize(const RawExtensionData& raw) {
  validate_extension_class(raw.j, raw.p);
  LaurentZU kept;
  for (const auto& [e, c] : raw.p.terms()) {
    if (in_canonical_window(raw.j, e.z, e.u)) kept.add_term(c, e.z, e.u);
  }
  return CanonicalBundle(raw.j, std::move(kept));
}

LaurentZU blow_up_substitution(const PlanePoly& curve) {
  LaurentZU out;
  for (const auto& [e, c] : curve.terms()) out.add_term(c, e.y, e.x + e.y);
  return out;
}

CanonicalBundle from_curve(const PlanePoly& curve, int j) {
  if (!is_zero(curve.constant_term())) throw ValidationError("curve does not pass through origin");
  return canonicalize(RawExtensionData{j, blow_up_substitution(curve)});
}

CanonicalBundle embed_next(const CanonicalBundle& b) {
  return CanonicalBundle(b.j() + 1, b.p() * LaurentZU::monomial(Rat(1), 1, 2));
}

bool splits_on_neighborhood(const CanonicalBundle& b, int n) {
  auto lo = b.p().min_u_degree();
  return !lo || *lo > n;
}

}  // namespace instanton
