#include "hurwitz/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < k || n < 0) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

void require_omega(const SubgroupRecord &h) {
  if (!h.omega) throw InvalidArgument("the splitting number is undefined for this subgroup");
}

std::uint32_t abelian_pow(const SubgroupRecord &h, std::uint32_t a, std::uint64_t e) {
  std::uint32_t r = 0;
  while (e) {
    if (e & 1) r = abelian_mul(h, r, a);
    a = abelian_mul(h, a, a);
    e >>= 1;
  }
  return r;
}

bool is_likely(const Setting &setting, const SubgroupRecord &h, const std::vector<int> &psi,
               int n) {
  const auto &cd = setting.classes();
  std::vector<long long> sums(cd.size(), 0);
  for (std::size_t k = 0; k < psi.size(); ++k)
    sums[h.tau[k]] += psi[k];
  for (std::size_t c = 0; c < cd.size(); ++c)
    if (sums[c] != static_cast<long long>(n) * cd.xi[c]) return false;
  return true;
}

std::uint64_t gcd_of_support(const std::vector<std::uint64_t> &row) {
  std::uint64_t g = 0;
  for (std::size_t n = 1; n < row.size(); ++n)
    if (row[n]) g = std::gcd(g, static_cast<std::uint64_t>(n));
  return g;
}

} // namespace

BigInt count_likely_maps(const Setting &setting, const SubgroupRecord &h, int n) {
  require_omega(h);
  if (n < 0) throw InvalidArgument("negative degree");
  const auto &cd = setting.classes();
  BigInt r = 1;
  for (std::size_t c = 0; c < cd.size(); ++c) {
    long long k = static_cast<long long>(h.tau_preimage(c).size());
    r *= binomial(static_cast<long long>(n) * cd.xi[c] + k - 1, k - 1);
  }
  return r;
}

std::pair<BigInt, BigInt> likely_leading_coefficient(const Setting &setting,
                                                     const SubgroupRecord &h) {
  require_omega(h);
  const auto &cd = setting.classes();
  BigInt num = 1, den = 1;
  for (std::size_t c = 0; c < cd.size(); ++c) {
    long long k = static_cast<long long>(h.tau_preimage(c).size());
    for (long long i = 1; i < k; ++i) {
      num *= cd.xi[c];
      den *= i;
    }
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

std::uint32_t pi_tilde(const SubgroupRecord &h, std::span<const int> psi) {
  std::uint32_t acc = 0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    std::uint32_t c = abelianization_coset(h, h.dh_classes[k].front());
    acc = abelian_mul(h, acc, abelian_pow(h, c, static_cast<std::uint64_t>(psi[k])));
  }
  return acc;
}

std::vector<LikelyMap> enumerate_likely_maps(const Setting &setting, const SubgroupRecord &h,
                                             int n) {
  require_omega(h);
  if (count_likely_maps(setting, h, n) > 10'000'000)
    throw CapExceeded("likely_maps", 10'000'000, "too many likely maps to list");
  const auto &cd = setting.classes();
  const std::size_t m = h.dh_classes.size();
  std::vector<int> remaining(cd.size());
  for (std::size_t c = 0; c < cd.size(); ++c)
    remaining[c] = n * cd.xi[c];
  std::vector<LikelyMap> out;
  std::vector<int> psi(m, 0);
  auto rec = [&](auto &self, std::size_t k) -> void {
    if (k == m) {
      LikelyMap lm{psi, n, pi_tilde(h, psi) == 0};
      out.push_back(std::move(lm));
      return;
    }
    std::size_t c = h.tau[k];
    bool last = k + 1 == m || h.tau[k + 1] != c;
    if (last) {
      psi[k] = remaining[c];
      int saved = remaining[c];
      remaining[c] = 0;
      self(self, k + 1);
      remaining[c] = saved;
      return;
    }
    int saved = remaining[c];
    for (int v = 0; v <= saved; ++v) {
      psi[k] = v;
      remaining[c] = saved - v;
      self(self, k + 1);
    }
    remaining[c] = saved;
  };
  rec(rec, 0);
  return out;
}

std::vector<LikelyMap> enumerate_really_likely(const Setting &setting, const SubgroupRecord &h,
                                               int n) {
  auto all = enumerate_likely_maps(setting, h, n);
  std::erase_if(all, [](const LikelyMap &l) { return !l.really_likely; });
  return all;
}

std::uint64_t non_splitter_period(const Setting &setting, const SubgroupRecord &h) {
  if (h.is_trivial()) return 1;
  if (!h.is_non_splitter()) throw InvalidArgument("subgroup is not a non-splitter");
  std::vector<int> psi(h.dh_classes.size());
  for (std::size_t k = 0; k < psi.size(); ++k)
    psi[k] = setting.classes().xi[h.tau[k]];
  return abelian_order(h, pi_tilde(h, psi));
}

std::map<std::vector<int>, CensusCounts> multidiscriminant_census(const MonoidTable &table,
                                                                  SubgroupId hid, int n) {
  const auto &s = table.setting();
  const auto &h = s.subgroup(hid);
  std::map<std::vector<int>, CensusCounts> out;
  for (ComponentId c : table.degree(n)) {
    const auto &comp = table.component(c);
    if (!s.contains(hid, comp.subgroup)) continue;
    auto mu = multidiscriminant(h, comp.canonical);
    auto &e = out[mu];
    ++e.within;
    if (comp.subgroup == hid) ++e.exact;
    if (h.omega) {
      e.likely = is_likely(s, h, mu, n);
      e.really_likely = e.likely && pi_tilde(h, mu) == 0;
    }
  }
  return out;
}

GrowthReport stabilization_report(const MonoidTable &table, const HilbertTable &hf, SubgroupId hid) {
  const auto &s = table.setting();
  const auto &h = s.subgroup(hid);
  GrowthReport r;
  r.subgroup = hid;
  r.omega = h.omega;
  r.window = hf.max_degree;
  const int N = hf.max_degree;
  if (N < 3) throw InsufficientData("window of " + std::to_string(N) + " degrees is too small");
  auto it = hf.counts.find(hid);
  std::vector<std::uint64_t> row = it == hf.counts.end() ? std::vector<std::uint64_t>(N + 1, 0) : it->second;

  if (h.is_trivial()) {
    r.non_splitter = true;
    r.period = 1;
    r.observed_period = gcd_of_support(row);
    r.threshold = 1;
    r.value = 0;
    for (int n = 1; n <= N; ++n)
      if (row[n]) r.off_progression.push_back(n);
    return r;
  }
  if (!h.omega) throw InvalidArgument("subgroup does not meet every class of D");

  for (int n = 1; n <= N; ++n) {
    auto census = multidiscriminant_census(table, hid, n);
    for (const auto &[mu, cc] : census) {
      if (!cc.likely || (cc.exact && !cc.really_likely)) r.census_consistent = false;
      if (cc.really_likely) r.per_map_max = std::max(r.per_map_max, cc.exact);
    }
  }
  for (int n = 1; n <= N; ++n)
    if (BigInt(row[n]) > BigInt(r.per_map_max) * count_likely_maps(s, h, n)) r.upper_sandwich = false;
  r.observed_period = gcd_of_support(row);

  if (h.is_non_splitter()) {
    r.non_splitter = true;
    r.period = non_splitter_period(s, h);
    const int k = static_cast<int>(r.period);
    for (int n = 1; n <= N; ++n)
      if (n % k && row[n]) r.off_progression.push_back(n);
    int last = N - N % k;
    if (last < k) throw InsufficientData("no multiple of the period inside the window");
    std::uint64_t v = row[last];
    int t = last;
    while (t - k >= k && row[t - k] == v)
      t -= k;
    int run = (last - t) / k + 1;
    if (v == 0) throw InsufficientData("no component of this group inside the window");
    if (run < 3)
      throw InsufficientData("stable run of " + std::to_string(run) +
                             " multiples of the period is too short");
    r.value = v;
    r.threshold = t;
    for (std::size_t c = 0; c < h.dh_classes.size(); ++c)
      r.class_thresholds.push_back(t * s.classes().xi[h.tau[c]]);
    r.per_map_max = std::max(r.per_map_max, v);
    return r;
  }

  const int k = static_cast<int>(r.observed_period);
  if (k == 0) throw InsufficientData("no component of this group inside the window");
  const int M = N / k;
  const int omega = *h.omega;
  r.ratio_min = INFINITY;
  r.ratio_max = 0;
  for (int m = (M + 1) / 2; m <= M; ++m) {
    if (m < 1) continue;
    double ratio = static_cast<double>(row[k * m]) / std::pow(static_cast<double>(m), omega);
    r.ratio_min = std::min(r.ratio_min, ratio);
    r.ratio_max = std::max(r.ratio_max, ratio);
    r.ratio_degrees.push_back(k * m);
  }
  if (r.ratio_degrees.size() < 2)
    throw InsufficientData("top half of the window has fewer than two points");
  return r;
}

AverageCoefficient average_leading_coefficient(const MonoidTable &table, const HilbertTable &hf,
                                               SubgroupId hid, std::span<const SubgroupId> factors,
                                               double tolerance) {
  const auto &s = table.setting();
  const auto &cd = s.classes();
  if (cd.size() != 1 || cd.xi[0] != 1)
    throw InvalidArgument("the average leading coefficient needs a single class with xi = 1");
  const auto &h = s.subgroup(hid);
  require_omega(h);
  AverageCoefficient a;
  a.n = hf.max_degree;
  a.s = *h.omega + 1;
  if (a.n < 1) throw InsufficientData("empty window");
  for (int k = 0; k <= a.n; ++k)
    a.cumulative += hf.count(hid, k);
  a.abelianization_order = h.abelianization_order();
  double fact = 1;
  for (int i = 2; i <= a.s; ++i)
    fact *= i;
  a.estimate = a.cumulative.convert_to<double>() * fact * static_cast<double>(a.abelianization_order) /
               std::pow(static_cast<double>(a.n), a.s);
  a.reference = 1;
  if (factors.empty()) {
    a.reference = static_cast<double>(stabilization_report(table, hf, hid).value);
  } else {
    for (SubgroupId f : factors)
      a.reference *= static_cast<double>(stabilization_report(table, hf, f).value);
  }
  if (a.reference == 0) throw InsufficientData("reference value is zero");
  a.relative_error = std::abs(a.estimate - a.reference) / a.reference;
  a.consistent = a.relative_error <= tolerance;
  return a;
}

} // namespace hurwitz
