#include "modchar/mono.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "modchar/error.hpp"
#include "modchar/ff.hpp"

namespace modchar {

namespace {

void require_same_context(const CohContext& x, const CohContext& y) {
  if (!(x == y)) throw ContextMismatch("classes belong to different (p, r) contexts");
}

std::string superscript(std::uint64_t n) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  const std::string dec = std::to_string(n);
  std::string out;
  for (char c : dec) out += digits[c - '0'];
  return out;
}

std::string subscript(std::uint64_t n) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string dec = std::to_string(n);
  std::string out;
  for (char c : dec) out += digits[c - '0'];
  return out;
}

// Compositions of `total` into `parts` naturals, in lexicographic order.
void compositions(std::uint64_t total, std::size_t parts, std::vector<std::uint64_t>& cur,
                  std::vector<std::vector<std::uint64_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint64_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CohContext CohContext::make(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (r < 1 || r > kMaxExtensionDegree) throw std::invalid_argument("r must lie in 1..8");
  CohContext ctx{p, r};
  (void)ctx.q();
  return ctx;
}

std::uint64_t CohContext::q() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > UINT64_MAX / p) throw std::overflow_error("q = p^r does not fit in 64 bits");
    q *= p;
  }
  return q;
}

Monomial Monomial::y_power(unsigned r, std::uint64_t e) {
  Monomial m = unit(r);
  m.b[0] = e;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; }) &&
         std::all_of(b.begin(), b.end(), [](auto v) { return v == 0; });
}

std::uint64_t Monomial::sort_key() const {
  std::uint64_t s = 0;
  for (auto v : a) s += v;
  for (auto v : b) s += 2 * v;
  return s;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (auto c = x.sort_key() <=> y.sort_key(); c != 0) return c;
  if (auto c = x.a <=> y.a; c != 0) return c;
  return x.b <=> y.b;
}

void validate(const Monomial& m, const CohContext& ctx) {
  if (m.a.size() != ctx.r || m.b.size() != ctx.r) {
    throw std::invalid_argument("monomial has " + std::to_string(m.b.size()) + " coordinates, expected r = " +
                                std::to_string(ctx.r));
  }
  for (auto v : m.a) {
    if (v > 1) throw std::invalid_argument("exterior exponents must be 0 or 1");
    if (v == 1 && ctx.p == 2) throw std::invalid_argument("no exterior generators in characteristic 2");
  }
}

std::uint64_t degree(const Monomial& m, std::uint64_t p) {
  std::uint64_t sb = std::accumulate(m.b.begin(), m.b.end(), std::uint64_t{0});
  if (p == 2) return sb;
  std::uint64_t sa = std::accumulate(m.a.begin(), m.a.end(), std::uint64_t{0});
  return sa + 2 * sb;
}

std::uint64_t weight(const Monomial& m, std::uint64_t p) {
  std::uint64_t w = 0;
  std::uint64_t pk = 1;
  for (std::size_t k = 0; k < m.b.size(); ++k) {
    const std::uint64_t e = m.a[k] + m.b[k];
    if (e != 0 && pk > UINT64_MAX / e) throw std::overflow_error("monomial weight overflows 64 bits");
    if (UINT64_MAX - w < pk * e) throw std::overflow_error("monomial weight overflows 64 bits");
    w += pk * e;
    if (k + 1 < m.b.size()) pk *= p;
  }
  return w;
}

bool is_invariant(const Monomial& m, const CohContext& ctx) { return weight(m, ctx.p) % (ctx.q() - 1) == 0; }

void require_invariant(const Monomial& m, const CohContext& ctx) {
  validate(m, ctx);
  if (!is_invariant(m, ctx)) {
    throw NotInvariant(format(m, ctx) + " is not invariant for q = " + std::to_string(ctx.q()) + " (weight " +
                       std::to_string(weight(m, ctx.p)) + " not divisible by " + std::to_string(ctx.q() - 1) + ")");
  }
}

std::vector<Monomial> enumerate_invariant_basis(const CohContext& ctx, std::uint64_t d) {
  std::vector<Monomial> out;
  const unsigned r = ctx.r;
  const unsigned max_mask = ctx.p == 2 ? 1U : (1U << r);
  for (unsigned mask = 0; mask < max_mask; ++mask) {
    const auto ext = static_cast<std::uint64_t>(std::popcount(mask));
    std::uint64_t poly_total = 0;
    if (ctx.p == 2) {
      poly_total = d;
    } else {
      if (ext > d || (d - ext) % 2 != 0) continue;
      poly_total = (d - ext) / 2;
    }
    std::vector<std::vector<std::uint64_t>> bs;
    std::vector<std::uint64_t> cur;
    compositions(poly_total, r, cur, bs);
    for (auto& b : bs) {
      Monomial m{std::vector<std::uint8_t>(r, 0), std::move(b)};
      for (unsigned k = 0; k < r; ++k) m.a[k] = (mask >> k) & 1U;
      if (is_invariant(m, ctx)) out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Monomial parse_monomial(std::string_view text, const CohContext& ctx) {
  Monomial m = Monomial::unit(ctx.r);
  std::size_t i = 0;
  bool saw_factor = false;
  bool saw_one = false;
  auto skip_separators = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  auto read_number = [&](const char* what) {
    const std::size_t start = i;
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const auto digit = static_cast<std::uint64_t>(text[i] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw ParseError(std::string(what) + " too large", start);
      v = v * 10 + digit;
      ++i;
    }
    if (i == start) throw ParseError(std::string("expected ") + what, start);
    return v;
  };
  skip_separators();
  while (i < text.size()) {
    const std::size_t start = i;
    const char c = text[i];
    if (c == '1') {
      ++i;
      saw_one = true;
    } else if (c == 'x' || c == 'y') {
      ++i;
      std::uint64_t index = 0;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        index = read_number("generator index");
      } else if (ctx.r != 1) {
        throw ParseError("generator index required when r > 1", i);
      }
      if (index >= ctx.r) throw ParseError("generator index out of range 0.." + std::to_string(ctx.r - 1), start);
      std::uint64_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = read_number("exponent");
      }
      if (c == 'x') {
        if (ctx.p == 2) throw ParseError("no exterior generators x in characteristic 2", start);
        if (e > 1 || m.a[index] + e > 1) throw ParseError("exterior generator squared", start);
        m.a[index] = static_cast<std::uint8_t>(m.a[index] + e);
      } else {
        if (m.b[index] > UINT64_MAX - e) throw ParseError("exponent too large", start);
        m.b[index] += e;
      }
      saw_factor = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '*' && text[i] != 'x' &&
        text[i] != 'y') {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    skip_separators();
  }
  if (!saw_factor && !saw_one) throw ParseError("empty monomial", 0);
  return m;
}

std::string format(const Monomial& m, const CohContext& ctx) {
  std::string out;
  auto append = [&](char gen, std::size_t k, std::uint64_t e) {
    if (!out.empty()) out += ' ';
    out += gen;
    if (ctx.r > 1) out += std::to_string(k);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t k = 0; k < m.a.size(); ++k)
    if (m.a[k]) append('x', k, 1);
  for (std::size_t k = 0; k < m.b.size(); ++k)
    if (m.b[k]) append('y', k, m.b[k]);
  return out.empty() ? "1" : out;
}

std::string pretty(const Monomial& m, const CohContext& ctx) {
  std::string out;
  auto append = [&](const char* gen, std::size_t k, std::uint64_t e) {
    out += gen;
    if (ctx.r > 1) out += subscript(k);
    if (e != 1) out += superscript(e);
  };
  for (std::size_t k = 0; k < m.a.size(); ++k)
    if (m.a[k]) append("x", k, 1);
  for (std::size_t k = 0; k < m.b.size(); ++k)
    if (m.b[k]) append("y", k, m.b[k]);
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

CohClass CohClass::of(const CohContext& ctx, const Monomial& m, Residue c) {
  CohClass out{ctx, {}};
  out.add_term(m, c);
  return out;
}

void CohClass::add_term(const Monomial& m, Residue c) {
  c %= ctx.p;
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second = modp::add(it->second, c, ctx.p);
  if (it->second == 0) terms.erase(it);
}

CohClass operator+(const CohClass& x, const CohClass& y) {
  require_same_context(x.ctx, y.ctx);
  CohClass out = x;
  for (const auto& [m, c] : y.terms) out.add_term(m, c);
  return out;
}

CohClass operator-(const CohClass& x) { return scale(x.ctx.p - 1, x); }

CohClass scale(Residue c, const CohClass& x) {
  CohClass out{x.ctx, {}};
  for (const auto& [m, v] : x.terms) out.add_term(m, modp::mul(c % x.ctx.p, v, x.ctx.p));
  return out;
}

TensorClass TensorClass::of(const CohContext& ctx, Tuple tuple, Residue c) {
  TensorClass out{ctx, tuple.size(), {}};
  out.add_term(tuple, c);
  return out;
}

void TensorClass::add_term(const Tuple& tuple, Residue c) {
  if (tuple.size() != arity) throw DimensionMismatch("tensor term has the wrong arity");
  c %= ctx.p;
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(tuple, c);
  if (inserted) return;
  it->second = modp::add(it->second, c, ctx.p);
  if (it->second == 0) terms.erase(it);
}

Residue TensorClass::coefficient(const Tuple& tuple) const {
  auto it = terms.find(tuple);
  return it == terms.end() ? 0 : it->second;
}

TensorClass operator+(const TensorClass& x, const TensorClass& y) {
  require_same_context(x.ctx, y.ctx);
  if (x.arity != y.arity) throw DimensionMismatch("tensor classes of different arity");
  TensorClass out = x;
  for (const auto& [t, c] : y.terms) out.add_term(t, c);
  return out;
}

TensorClass operator-(const TensorClass& x) { return scale(x.ctx.p - 1, x); }

TensorClass operator-(const TensorClass& x, const TensorClass& y) { return x + (-y); }

TensorClass scale(Residue c, const TensorClass& x) {
  TensorClass out = TensorClass::zero(x.ctx, x.arity);
  for (const auto& [t, v] : x.terms) out.add_term(t, modp::mul(c % x.ctx.p, v, x.ctx.p));
  return out;
}

TensorClass tensor(const TensorClass& x, const TensorClass& y) {
  require_same_context(x.ctx, y.ctx);
  TensorClass out = TensorClass::zero(x.ctx, x.arity + y.arity);
  for (const auto& [tx, cx] : x.terms) {
    for (const auto& [ty, cy] : y.terms) {
      auto t = tx;
      t.insert(t.end(), ty.begin(), ty.end());
      out.add_term(t, modp::mul(cx, cy, x.ctx.p));
    }
  }
  return out;
}

std::string pretty(const TensorClass& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  for (const auto& [tuple, c] : t.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "·";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += "⊗";
      out += pretty(tuple[i], t.ctx);
    }
  }
  return out;
}

std::string format(const TensorClass& t) {
  if (t.terms.empty()) return "0";
  std::string out;
  for (const auto& [tuple, c] : t.terms) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += " (x) ";
      out += format(tuple[i], t.ctx);
    }
  }
  return out;
}

}  // namespace modchar
