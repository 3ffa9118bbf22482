#include "lsm/specfun/zeta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace lsm {

namespace {

std::shared_mutex bern_mutex;
std::vector<Rational> bern_cache{Rational(1)};

std::shared_mutex zeta_mutex;
std::map<std::pair<int, long>, Real> zeta_cache;

Real zeta_alternating(int s) {
  const long bits = working_bits();
  const long n = static_cast<long>(std::ceil(bits * 0.3933)) + 4;
  Real r;
  {
    auto guard = PrecisionGuard::bits(bits + 32);
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), all integers
    std::vector<Integer> d(static_cast<size_t>(n) + 1);
    Integer t = 1, acc = 0;
    for (long i = 0; i <= n; ++i) {
      acc += t;
      d[static_cast<size_t>(i)] = acc;
      t = t * 4 * (n + i) * (n - i) / ((2 * i + 1) * (2 * i + 2));
    }
    const Integer& dn = d[static_cast<size_t>(n)];
    Real sum(0);
    for (long k = 0; k < n; ++k) {
      Integer diff = d[static_cast<size_t>(k)] - dn;
      Real term = Real(diff) / pow(Real(k + 1), static_cast<long>(s));
      if (k & 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    Real denom = Real(dn) * (Real(1) - ldexp(Real(1), 1 - s));
    r = -sum / denom;
  }
  return rounded(r);
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  if (n == 1) return Rational(-1, 2);
  if (n > 1 && (n & 1)) return Rational(0);
  {
    std::shared_lock lock(bern_mutex);
    if (static_cast<size_t>(n) < bern_cache.size()) return bern_cache[static_cast<size_t>(n)];
  }
  std::unique_lock lock(bern_mutex);
  // sum_{j<=m} C(m+1, j) B_j = 0, with odd B_j (j >= 3) zero
  while (bern_cache.size() <= static_cast<size_t>(n)) {
    long m = static_cast<long>(bern_cache.size());
    if (m > 1 && (m & 1)) {
      bern_cache.emplace_back(0);
      continue;
    }
    Rational s = 0;
    Integer c = 1;  // C(m+1, j)
    for (long j = 0; j < m; ++j) {
      Rational bj = j == 1 ? Rational(-1, 2) : bern_cache[static_cast<size_t>(j)];
      if (bj != 0) s += Rational(c) * bj;
      c = c * (m + 1 - j) / (j + 1);
    }
    bern_cache.push_back(-s / Rational(m + 1));
  }
  return bern_cache[static_cast<size_t>(n)];
}

Real zeta(int s) {
  if (s == 1) throw DomainError("zeta: pole at s = 1");
  if (s <= 0) {
    if (s == 0) return Real(-1) / 2;
    int n = -s;
    return Real(-bernoulli(n + 1) / Rational(n + 1));
  }
  const long bits = working_bits();
  {
    std::shared_lock lock(zeta_mutex);
    auto it = zeta_cache.find({s, bits});
    if (it != zeta_cache.end()) return it->second;
  }
  Real v = zeta_alternating(s);
  std::unique_lock lock(zeta_mutex);
  zeta_cache.emplace(std::make_pair(s, bits), v);
  return v;
}

Real zeta(int s, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("zeta: argument must be >= 2");
  auto g = ctx.activate();
  return zeta(s);
}

Rational zeta_even_over_pi_power(int k) {
  if (k < 1) throw DomainError("zeta_even_over_pi_power: k must be >= 1");
  // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
  Rational r = bernoulli(2 * k) * Rational(Integer(1) << (2 * k), factorial(2 * k)) / 2;
  return k % 2 ? r : Rational(-r);
}

}  // namespace lsm
