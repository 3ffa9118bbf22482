#include "lsm/symconst/constexpr.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "lsm/logsine/binomial_sums.hpp"
#include "lsm/specfun/zeta.hpp"

namespace lsm {

namespace {

struct TagName {
  BasisTag tag;
  const char* name;
  bool has_args;
};

constexpr TagName kTagNames[] = {
    {BasisTag::Pi, "Pi", false},         {BasisTag::Log2, "Log2", false},
    {BasisTag::Zeta, "Zeta", true},      {BasisTag::LiHalf, "LiHalf", true},
    {BasisTag::LiNegOne, "LiNegOne", true}, {BasisTag::ClPi3, "ClPi3", true},
    {BasisTag::GlPi3, "GlPi3", true},    {BasisTag::Lambda, "Lambda", true},
    {BasisTag::SPlus, "SPlus", true},
};

const TagName& tag_info(BasisTag t) {
  for (const auto& tn : kTagNames) {
    if (tn.tag == t) return tn;
  }
  throw std::logic_error("unknown basis tag");
}

void require_parts(const Composition& a, int min_first, const char* what) {
  if (a.parts.empty()) throw DomainError(std::string(what) + ": empty index");
  for (int p : a.parts) {
    if (p < 1) throw DomainError(std::string(what) + ": indices must be positive");
  }
  if (a.parts.front() < min_first) throw DomainError(std::string(what) + ": divergent index");
}

BasisConstant make(BasisTag tag, Composition a) {
  BasisConstant b;
  b.tag = tag;
  b.args = std::move(a);
  return b;
}

std::shared_mutex memo_mutex;
std::map<std::pair<BasisConstant, long>, Real> memo;

Real eval_uncached(const BasisConstant& b, const PrecisionContext& ctx) {
  const Real half = Real(1) / 2;
  switch (b.tag) {
    case BasisTag::Pi:
      return pi();
    case BasisTag::Log2:
      return ln2();
    case BasisTag::Zeta:
      return b.args.depth() == 1 ? zeta(b.args.parts[0], ctx) : mzv(b.args, ctx);
    case BasisTag::LiHalf:
      return multiple_polylog(b.args, Complex(half), ctx).re;
    case BasisTag::LiNegOne:
      return multiple_polylog(b.args, Complex(-1), ctx).re;
    case BasisTag::ClPi3:
      return clausen_glaisher(ClKind::Cl, b.args, pi() / 3, ctx);
    case BasisTag::GlPi3:
      return clausen_glaisher(ClKind::Gl, b.args, pi() / 3, ctx);
    case BasisTag::Lambda:
      return kummer_lambda(b.args.parts[0], half, ctx);
    case BasisTag::SPlus:
      return central_binomial_sum(BinomialSign::Plus, b.args.parts[0], ctx);
  }
  throw std::logic_error("unknown basis tag");
}

// Parser over the text form. Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | name ['(' int (',' int)* ')'] ['^' ['-'] integer]
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ConstExpr expr() {
    ConstExpr out;
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      ConstExpr t = term();
      out += neg ? -t : t;
      skip();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      neg = c == '-';
      ++pos_;
    }
    return out;
  }

 private:
  ConstExpr term() {
    ConstExpr t = factor();
    for (;;) {
      skip();
      if (peek() != '*') return t;
      ++pos_;
      t *= factor();
    }
  }

  ConstExpr factor() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Integer num{std::string(digits())};
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        Integer den{std::string(digits())};
        if (den == 0) fail("zero denominator");
        return ConstExpr(Rational(num, den));
      }
      return ConstExpr(Rational(num));
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a number or constant name");
    const TagName* info = nullptr;
    for (const auto& tn : kTagNames) {
      if (name == tn.name) info = &tn;
    }
    if (!info) fail("unknown constant '" + std::string(name) + "'");
    Composition args;
    skip();
    if (info->has_args) {
      if (peek() != '(') fail("expected '(' after " + std::string(name));
      ++pos_;
      for (;;) {
        skip();
        args.parts.push_back(std::stoi(std::string(digits())));
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        break;
      }
    }
    BasisConstant b = build(info->tag, std::move(args));
    int power = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      power = std::stoi(std::string(digits()));
      if (neg) power = -power;
    }
    return power == 0 ? ConstExpr(1) : ConstExpr(b, power);
  }

  BasisConstant build(BasisTag tag, Composition args) {
    try {
      switch (tag) {
        case BasisTag::Pi:
          return BasisConstant::pi();
        case BasisTag::Log2:
          return BasisConstant::log2();
        case BasisTag::Zeta:
          return BasisConstant::zeta(std::move(args));
        case BasisTag::LiNegOne:
          return BasisConstant::li_neg_one(std::move(args));
        case BasisTag::ClPi3:
          return BasisConstant::cl_pi3(std::move(args));
        case BasisTag::GlPi3:
          return BasisConstant::gl_pi3(std::move(args));
        default:
          break;
      }
      if (args.depth() != 1) fail("expected a single index");
      int n = args.parts[0];
      if (tag == BasisTag::LiHalf) return BasisConstant::li_half(n);
      if (tag == BasisTag::Lambda) return BasisConstant::lambda(n);
      return BasisConstant::s_plus(n);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  std::string_view digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[nodiscard]] char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("ConstExpr::parse: " + msg + " at offset " + std::to_string(pos_) + " in \"" +
                      std::string(s_) + "\"");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

std::string rational_text(const Rational& q) {
  std::string s = boost::multiprecision::numerator(q).str();
  Integer d = boost::multiprecision::denominator(q);
  if (d != 1) s += "/" + d.str();
  return s;
}

}  // namespace

BasisConstant BasisConstant::pi() { return make(BasisTag::Pi, {}); }
BasisConstant BasisConstant::log2() { return make(BasisTag::Log2, {}); }

BasisConstant BasisConstant::zeta(int k) { return zeta(Composition{k}); }

BasisConstant BasisConstant::zeta(Composition a) {
  require_parts(a, 2, "Zeta");
  return make(BasisTag::Zeta, std::move(a));
}

BasisConstant BasisConstant::li_half(int k) {
  if (k < 1) throw DomainError("LiHalf: index must be positive");
  return make(BasisTag::LiHalf, Composition{k});
}

BasisConstant BasisConstant::li_neg_one(Composition a) {
  require_parts(a, 1, "LiNegOne");
  return make(BasisTag::LiNegOne, std::move(a));
}

BasisConstant BasisConstant::cl_pi3(Composition a) {
  require_parts(a, 1, "ClPi3");
  return make(BasisTag::ClPi3, std::move(a));
}

BasisConstant BasisConstant::gl_pi3(Composition a) {
  require_parts(a, 1, "GlPi3");
  return make(BasisTag::GlPi3, std::move(a));
}

BasisConstant BasisConstant::lambda(int n) {
  if (n < 1) throw DomainError("Lambda: index must be positive");
  return make(BasisTag::Lambda, Composition{n});
}

BasisConstant BasisConstant::s_plus(int n) {
  if (n < 2) throw DomainError("SPlus: index must be at least 2");
  return make(BasisTag::SPlus, Composition{n});
}

int BasisConstant::weight() const { return args.parts.empty() ? 1 : args.weight(); }

std::string BasisConstant::to_string() const {
  const TagName& tn = tag_info(tag);
  if (!tn.has_args) return tn.name;
  return std::string(tn.name) + "(" + args.to_string() + ")";
}

Real BasisConstant::eval(const PrecisionContext& ctx) const {
  auto g = ctx.activate();
  const auto key = std::make_pair(*this, working_bits());
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Real v = eval_uncached(*this, ctx);
  std::unique_lock lock(memo_mutex);
  memo.emplace(key, v);
  return v;
}

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& [b, e] : m) w += b.weight() * e;
  return w;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) out.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

ConstExpr::ConstExpr(int c) : ConstExpr(Rational(c)) {}

ConstExpr::ConstExpr(const Rational& c) { add_term({}, c); }

ConstExpr::ConstExpr(const BasisConstant& b, int power) {
  if (power == 0) {
    add_term({}, Rational(1));
  } else {
    add_term({{b, power}}, Rational(1));
  }
}

ConstExpr::ConstExpr(const Monomial& m, const Rational& c) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].second == 0 || (i > 0 && !(m[i - 1].first < m[i].first))) {
      throw DomainError("ConstExpr: monomial is not canonical");
    }
  }
  add_term(m, c);
}

ConstExpr ConstExpr::parse(std::string_view text) { return Parser(text).expr(); }

void ConstExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ConstExpr::constant_term() const { return coefficient({}); }

Rational ConstExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ConstExpr::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = monomial_weight(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (monomial_weight(m) != w) return std::nullopt;
  }
  return w;
}

bool ConstExpr::is_homogeneous(int w) const {
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return monomial_weight(t.first) == w; });
}

std::string ConstExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Rational a = neg ? Rational(-c) : c;
    std::string body;
    if (m.empty() || a != 1) body = rational_text(a);
    for (const auto& [b, e] : m) {
      if (!body.empty()) body += "*";
      body += b.to_string();
      if (e != 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

Real ConstExpr::eval(const PrecisionContext& ctx) const {
  auto g = ctx.activate();
  Real sum(0);
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 32);
    const PrecisionContext inner = ctx.raised(10);
    for (const auto& [m, c] : terms_) {
      Real t(c);
      for (const auto& [b, e] : m) {
        Real v = b.eval(inner);
        t *= e > 0 ? lsm::pow(v, static_cast<long>(e)) : Real(1) / lsm::pow(v, static_cast<long>(-e));
      }
      sum += t;
    }
  }
  return rounded(sum);
}

ConstExpr ConstExpr::scale(const Rational& q) const {
  ConstExpr out;
  if (q == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * q);
  return out;
}

ConstExpr ConstExpr::pow(int n) const {
  if (n < 0) {
    auto inv = CoeffOps<ConstExpr>::inverse(*this);
    if (!inv) throw DomainError("ConstExpr::pow: negative power of a non-monomial");
    return inv->pow(-n);
  }
  ConstExpr result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

ConstExpr& ConstExpr::operator+=(const ConstExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ConstExpr& ConstExpr::operator*=(const ConstExpr& o) {
  ConstExpr out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) out.add_term(monomial_product(m1, m2), c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

ConstExpr zeta_reduced(int k) {
  if (k < 2) throw DomainError("zeta_reduced: k must be at least 2");
  if (k % 2 == 0) return ConstExpr({{BasisConstant::pi(), k}}, zeta_even_over_pi_power(k / 2));
  return ConstExpr(BasisConstant::zeta(k));
}

std::optional<ConstExpr> CoeffOps<ConstExpr>::inverse(const ConstExpr& c) {
  if (c.terms().size() != 1) return std::nullopt;
  const auto& [m, q] = *c.terms().begin();
  Monomial inv = m;
  for (auto& [b, e] : inv) e = -e;
  return ConstExpr(inv, Rational(1) / q);
}

}  // namespace lsm
