#ifndef LSM_MPCORE_SERIES_HPP
#define LSM_MPCORE_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsm/mpcore/complex.hpp"
#include "lsm/mpcore/context.hpp"
#include "lsm/mpcore/real.hpp"

namespace lsm {

/// Coefficient-ring hooks used by TruncatedSeries. Specialise for new rings.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static Rational zero() { return Rational(0); }
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational scale(const Rational& c, const Rational& q) { return c * q; }
  static std::optional<Rational> inverse(const Rational& c) {
    if (c == 0) return std::nullopt;
    return Rational(1) / c;
  }
};

template <>
struct CoeffOps<Complex> {
  static Complex zero() { return Complex(0); }
  static bool is_zero(const Complex& c) { return c.is_zero(); }
  static Complex from_rational(const Rational& q) { return Complex(q); }
  static Complex scale(const Complex& c, const Rational& q) { return c * Real(q); }
  static std::optional<Complex> inverse(const Complex& c) {
    if (c.is_zero()) return std::nullopt;
    return Complex(1) / c;
  }
};

using Exponents = std::vector<int>;

/// Multivariate power series truncated at a total degree. Coefficients are
/// stored sparsely; anything of total degree > total_order is dropped.
template <class C>
class TruncatedSeries {
 public:
  using Ops = CoeffOps<C>;

  TruncatedSeries(std::vector<std::string> variables, int total_order)
      : vars_(std::move(variables)), order_(total_order) {
    if (order_ < 0) throw DomainError("TruncatedSeries: negative total order");
  }

  static TruncatedSeries constant(std::vector<std::string> variables, int total_order, C c) {
    TruncatedSeries s(std::move(variables), total_order);
    s.set(Exponents(s.vars_.size(), 0), std::move(c));
    return s;
  }

  /// The series consisting of the single variable at position `index`.
  static TruncatedSeries variable(std::vector<std::string> variables, int total_order, size_t index) {
    TruncatedSeries s(std::move(variables), total_order);
    Exponents e(s.vars_.size(), 0);
    e.at(index) = 1;
    s.set(e, Ops::from_rational(Rational(1)));
    return s;
  }

  [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
  [[nodiscard]] int total_order() const { return order_; }
  [[nodiscard]] const std::map<Exponents, C>& terms() const { return terms_; }

  [[nodiscard]] C coefficient(const Exponents& e) const {
    check_arity(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Ops::zero() : it->second;
  }

  [[nodiscard]] C constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

  void set(const Exponents& e, C c) {
    check_arity(e);
    if (degree(e) > order_) return;
    if (Ops::is_zero(c)) {
      terms_.erase(e);
    } else {
      terms_[e] = std::move(c);
    }
  }

  void add_to(const Exponents& e, const C& c) {
    if (degree(e) > order_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!Ops::is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Homogeneous component of the given total degree.
  [[nodiscard]] TruncatedSeries homogeneous(int d) const {
    TruncatedSeries r(vars_, order_);
    for (const auto& [e, c] : terms_) {
      if (degree(e) == d) r.terms_.emplace(e, c);
    }
    return r;
  }

  [[nodiscard]] TruncatedSeries truncate(int new_order) const {
    TruncatedSeries r(vars_, new_order);
    for (const auto& [e, c] : terms_) {
      if (degree(e) <= new_order) r.terms_.emplace(e, c);
    }
    return r;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_to(e, c);
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r(vars_, order_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Ops::scale(c, Rational(-1)));
    return r;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r(vars_, order_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
      int da = degree(ea);
      for (const auto& [eb, cb] : o.terms_) {
        if (da + degree(eb) > order_) continue;
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_to(e, ca * cb);
      }
    }
    return r;
  }

  TruncatedSeries scale(const Rational& q) const {
    TruncatedSeries r(vars_, order_);
    for (const auto& [e, c] : terms_) r.set(e, Ops::scale(c, q));
    return r;
  }

  TruncatedSeries scale_by(const C& k) const {
    TruncatedSeries r(vars_, order_);
    for (const auto& [e, c] : terms_) r.set(e, c * k);
    return r;
  }

  /// exp(f); requires f(0) = 0. Uses d*g_d = sum_j j f_j g_{d-j} on homogeneous parts.
  [[nodiscard]] TruncatedSeries exp() const {
    if (!Ops::is_zero(constant_term())) throw DomainError("series exp: constant term must be 0");
    auto f = split();
    std::vector<TruncatedSeries> g;
    g.push_back(constant(vars_, order_, Ops::from_rational(Rational(1))));
    for (int d = 1; d <= order_; ++d) {
      TruncatedSeries acc(vars_, order_);
      for (int j = 1; j <= d; ++j) {
        if (f[j].terms_.empty()) continue;
        acc = acc + (f[j] * g[d - j]).scale(Rational(j));
      }
      g.push_back(acc.scale(Rational(1, d)));
    }
    return join(g);
  }

  /// log(f); requires f(0) = 1. Uses d*g_d = d*f_d - sum_{j<d} j g_j f_{d-j}.
  [[nodiscard]] TruncatedSeries log() const {
    if (!is_one(constant_term())) throw DomainError("series log: constant term must be 1");
    auto f = split();
    std::vector<TruncatedSeries> g;
    g.emplace_back(vars_, order_);
    for (int d = 1; d <= order_; ++d) {
      TruncatedSeries acc = f[d].scale(Rational(d));
      for (int j = 1; j < d; ++j) {
        if (f[d - j].terms_.empty()) continue;
        acc = acc - (g[j] * f[d - j]).scale(Rational(j));
      }
      g.push_back(acc.scale(Rational(1, d)));
    }
    return join(g);
  }

  /// 1/f; requires f(0) = 1.
  [[nodiscard]] TruncatedSeries reciprocal() const {
    if (!is_one(constant_term())) throw DomainError("series reciprocal: constant term must be 1");
    auto f = split();
    std::vector<TruncatedSeries> g;
    g.push_back(constant(vars_, order_, Ops::from_rational(Rational(1))));
    for (int d = 1; d <= order_; ++d) {
      TruncatedSeries acc(vars_, order_);
      for (int j = 1; j <= d; ++j) {
        if (f[j].terms_.empty()) continue;
        acc = acc - f[j] * g[d - j];
      }
      g.push_back(acc);
    }
    return join(g);
  }

  /// Exact quotient by a homogeneous polynomial `den` of degree e >= 1 whose
  /// leading coefficient (lexicographic) is invertible. The quotient is known
  /// through degree total_order - e and is returned truncated there. Throws if
  /// the division leaves a remainder.
  [[nodiscard]] TruncatedSeries divide_exact(const TruncatedSeries& den) const {
    check_compatible(den);
    if (den.terms_.empty()) throw DomainError("series divide: zero divisor");
    int e = degree(den.terms_.rbegin()->first);
    for (const auto& [ex, c] : den.terms_) {
      if (degree(ex) != e) throw DomainError("series divide: divisor must be homogeneous");
    }
    if (e > order_) throw DomainError("series divide: divisor degree exceeds order");
    // lexicographically largest monomial leads
    const auto& [lead_e, lead_c] = *den.terms_.rbegin();
    auto inv = Ops::inverse(lead_c);
    if (!inv) throw DomainError("series divide: leading coefficient not invertible");
    TruncatedSeries q(vars_, order_ - e);
    TruncatedSeries rem(vars_, order_);
    for (const auto& [ex, c] : terms_) rem.terms_.emplace(ex, c);
    Exponents qe(vars_.size()), pe(vars_.size());
    while (!rem.terms_.empty()) {
      auto it = rem.terms_.rbegin();
      const Exponents& top = it->first;
      if (degree(top) > order_) {
        rem.terms_.erase(top);
        continue;
      }
      bool divisible = degree(top) >= e;
      for (size_t i = 0; divisible && i < qe.size(); ++i) {
        qe[i] = top[i] - lead_e[i];
        divisible = qe[i] >= 0;
      }
      if (!divisible) throw DomainError("series divide: division is not exact");
      C factor = it->second * *inv;
      q.set(qe, factor);
      for (const auto& [de, dc] : den.terms_) {
        for (size_t i = 0; i < pe.size(); ++i) pe[i] = qe[i] + de[i];
        rem.add_to(pe, Ops::scale(factor * dc, Rational(-1)));
      }
    }
    return q;
  }

  static int degree(const Exponents& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }

 private:
  static bool is_one(const C& c) { return Ops::is_zero(c - Ops::from_rational(Rational(1))); }

  void check_arity(const Exponents& e) const {
    if (e.size() != vars_.size()) throw DomainError("series: exponent arity mismatch");
  }
  void check_compatible(const TruncatedSeries& o) const {
    if (o.vars_ != vars_) throw DomainError("series: mismatched variable sets");
    if (o.order_ != order_) throw DomainError("series: mismatched total order");
  }

  std::vector<TruncatedSeries> split() const {
    std::vector<TruncatedSeries> parts;
    for (int d = 0; d <= order_; ++d) parts.emplace_back(vars_, order_);
    for (const auto& [e, c] : terms_) parts[degree(e)].terms_.emplace(e, c);
    return parts;
  }

  TruncatedSeries join(const std::vector<TruncatedSeries>& parts) const {
    TruncatedSeries r(vars_, order_);
    for (const auto& p : parts) {
      for (const auto& [e, c] : p.terms_) r.add_to(e, c);
    }
    return r;
  }

  std::vector<std::string> vars_;
  int order_;
  std::map<Exponents, C> terms_;
};

enum class SeriesOp { Add, Mul, Exp, Log, Reciprocal };

/// Single entry point for the elementary operations; `b` is needed by Add and Mul only.
template <class C>
TruncatedSeries<C> series_elementary(SeriesOp op, const TruncatedSeries<C>& a,
                                     const TruncatedSeries<C>* b = nullptr) {
  switch (op) {
    case SeriesOp::Add:
    case SeriesOp::Mul:
      if (b == nullptr) throw DomainError("series_elementary: binary op needs two operands");
      return op == SeriesOp::Add ? a + *b : a * *b;
    case SeriesOp::Exp:
      return a.exp();
    case SeriesOp::Log:
      return a.log();
    case SeriesOp::Reciprocal:
      return a.reciprocal();
  }
  throw DomainError("series_elementary: unknown op");
}

/// C(lambda, n) = lambda(lambda-1)...(lambda-n+1)/n! as a series in one variable.
TruncatedSeries<Rational> binom_lambda_series(int n, int order, const std::string& var = "lambda");

}  // namespace lsm

#endif  // LSM_MPCORE_SERIES_HPP
