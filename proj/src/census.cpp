#include "instanton/census.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "instanton/errors.hpp"

namespace instanton {
namespace {

DirectImageBounds bounds_for(int j, const std::optional<int>& max_degree) {
  return max_degree ? DirectImageBounds::from_max_degree(j, *max_degree) : DirectImageBounds::defaults(j);
}

std::string describe(const CanonicalBundle& b) {
  return "(" + std::to_string(b.j()) + ", " + b.p().to_string() + ")";
}

CanonicalBundle bundle_from_coefficients(int j, const std::vector<ZUExponent>& window,
                                         const std::vector<int>& coeffs) {
  LaurentZU p;
  for (std::size_t i = 0; i < window.size(); ++i) p.add_term(Rat(coeffs[i]), window[i].z, window[i].u);
  return CanonicalBundle(j, std::move(p));
}

}  // namespace

std::vector<CanonicalBundle> sample_polynomials(int j, std::size_t n, std::uint64_t seed, int range) {
  if (j < 1) throw ValidationError("splitting type must be positive");
  if (range < 0) throw ValidationError("coefficient range must be nonnegative");
  const std::vector<ZUExponent> window = canonical_window(j);
  std::vector<CanonicalBundle> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<int> coeffs(window.size());
    for (auto& c : coeffs) c = dist(rng);
    out.push_back(bundle_from_coefficients(j, window, coeffs));
  }
  return out;
}

std::vector<CanonicalBundle> exhaustive_polynomials(int j, int range) {
  if (j < 1) throw ValidationError("splitting type must be positive");
  if (range < 0) throw ValidationError("coefficient range must be nonnegative");
  const std::vector<ZUExponent> window = canonical_window(j);
  std::vector<int> coeffs(window.size(), -range);
  std::vector<CanonicalBundle> out;
  while (true) {
    out.push_back(bundle_from_coefficients(j, window, coeffs));
    std::size_t i = coeffs.size();
    while (i > 0 && coeffs[i - 1] == range) coeffs[--i] = -range;
    if (i == 0) break;
    ++coeffs[i - 1];
  }
  return out;
}

std::vector<std::string> bound_violations(int j, const InstantonNumbers& n) {
  std::vector<std::string> out;
  const std::string pair = "(" + std::to_string(n.width) + "," + std::to_string(n.height) + ")";
  if (n.width < 1) out.push_back(pair + ": width below 1");
  if (n.height < j - 1) out.push_back(pair + ": height below j-1");
  if (n.charge() < j) out.push_back(pair + ": charge below j");
  if (n.charge() > j * j) out.push_back(pair + ": charge above j^2");
  return out;
}

CensusReport census(const CensusOptions& options) {
  const int j = options.j;
  const std::vector<CanonicalBundle> classes =
      options.exhaustive ? exhaustive_polynomials(j, options.range)
                         : sample_polynomials(j, options.samples, options.seed, options.range);
  const DirectImageBounds bounds = bounds_for(j, options.max_degree);

  struct Outcome {
    std::optional<InstantonNumbers> numbers;
    std::string failure;
  };
  std::vector<Outcome> outcomes(classes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < classes.size(); i = next++) {
      try {
        const CanonicalBundle& b = classes[i];
        outcomes[i].numbers = InstantonNumbers{width(j, b.p(), bounds), height(j, b.p())};
      } catch (const Error& e) {
        outcomes[i].failure = e.what();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(classes.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CensusReport report;
  report.j = j;
  report.samples = classes.size();
  report.range = options.range;
  report.seed = options.exhaustive ? 0 : options.seed;
  report.exhaustive = options.exhaustive;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (!o.numbers) {
      report.violations.push_back("sample " + std::to_string(i) + " " + describe(classes[i]) + ": " + o.failure);
      continue;
    }
    ++report.histogram[{o.numbers->width, o.numbers->height}];
    for (const auto& v : bound_violations(j, *o.numbers)) {
      report.violations.push_back("sample " + std::to_string(i) + " " + describe(classes[i]) + ": " + v);
    }
    if (o.numbers->charge() == j * j && !classes[i].is_split()) ++report.nonsplit_max_charge;
  }

  const LaurentZU zero;
  report.split_probe = InstantonNumbers{width(j, zero, bounds), height(j, zero)};
  for (const auto& v : bound_violations(j, report.split_probe)) report.violations.push_back("split probe: " + v);

  if (j >= 2) {
    const CanonicalBundle source = sample_polynomials(j - 1, 1, options.seed, std::max(options.range, 1)).front();
    const CanonicalBundle image = embed_next(source);
    report.phi_probe = InstantonNumbers{width(j, image.p(), bounds), height(j, image.p())};
    for (const auto& v : bound_violations(j, *report.phi_probe)) {
      report.violations.push_back("embedding probe " + describe(image) + ": " + v);
    }
    if (!splits_on_neighborhood(image, 2)) {
      report.violations.push_back("embedding probe " + describe(image) + ": does not split on the second neighborhood");
    }
  }
  return report;
}

bool verify_stratification_bounds(const CensusReport& report) {
  if (!report.violations.empty()) return false;
  for (const auto& [key, count] : report.histogram) {
    if (!bound_violations(report.j, InstantonNumbers{key.first, key.second}).empty()) return false;
  }
  return report.split_probe.charge() == report.j * report.j && report.nonsplit_max_charge == 0;
}

}  // namespace instanton
