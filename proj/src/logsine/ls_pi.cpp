#include <map>
#include <mutex>

#include "lsm/logsine/logsine.hpp"
#include "lsm/mpcore/series.hpp"

namespace lsm {

namespace {

// alpha(m) = (1 - 2^{1-m}) zeta(m), alpha(1) = 0
ConstExpr alpha(int m) {
  if (m == 1) return ConstExpr();
  return zeta_reduced(m).scale(Rational(1) - Rational(Integer(1), Integer(1) << (m - 1)));
}

std::mutex memo_mutex;
std::map<int, ConstExpr> memo;

}  // namespace

ConstExpr ls_pi_recursive(int n) {
  if (n < 1) throw DomainError("ls_pi_recursive: n must be at least 1");
  if (n == 1) return -ConstExpr(BasisConstant::pi());
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  const int N = n - 2;
  ConstExpr acc = ConstExpr(BasisConstant::pi()) * alpha(N + 1);
  for (int k = 1; k <= N - 2; ++k) {
    Rational c = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k + 1));
    acc += (alpha(N - k) * ls_pi_recursive(k + 2)).scale(c);
  }
  ConstExpr r = acc.scale(Rational(factorial(N)) * (N % 2 == 0 ? 1 : -1));
  std::lock_guard lock(memo_mutex);
  memo.emplace(n, r);
  return r;
}

std::vector<ConstExpr> ls_pi_egf(int max_n) {
  if (max_n < 1) throw DomainError("ls_pi_egf: max_n must be at least 1");
  const int order = max_n - 1;
  // log(Gamma(1+x)/Gamma(1+x/2)^2) = sum_{k>=2} (-1)^k alpha(k)/k x^k
  TruncatedSeries<ConstExpr> lg({"x"}, order);
  for (int k = 2; k <= order; ++k) {
    lg.set({k}, alpha(k).scale(Rational(k % 2 == 0 ? 1 : -1, k)));
  }
  TruncatedSeries<ConstExpr> e = lg.exp();
  const ConstExpr p(BasisConstant::pi());
  std::vector<ConstExpr> out;
  out.reserve(static_cast<size_t>(max_n));
  for (int m = 0; m <= order; ++m) {
    out.push_back(-(p * e.coefficient({m})).scale(Rational(factorial(m))));
  }
  return out;
}

}  // namespace lsm
