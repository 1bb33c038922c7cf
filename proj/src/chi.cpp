#include "modchar/chi.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <stdexcept>

#include "modchar/coalg.hpp"
#include "modchar/error.hpp"

namespace modchar {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (out > UINT64_MAX / base) throw std::overflow_error("integer power overflows 64 bits");
    out *= base;
  }
  return out;
}

bool has_unit_factor(const TensorClass::Tuple& t) {
  return std::any_of(t.begin(), t.end(), [](const Monomial& m) { return m.is_unit(); });
}

// A pool of interchangeable digit units: x_k (place == 0) or `count` copies of p^j inside b_k.
struct UnitSource {
  unsigned k;
  std::uint64_t place;
  std::uint64_t count;
};

class TermSearch {
 public:
  TermSearch(const ChiQuery& q) : q_(q), modulus_(q.ctx.q() - 1), sources_(q.ctx.r), totals_(q.ctx.r, 0) {
    const auto p = q.ctx.p;
    const unsigned r = q.ctx.r;
    class_weight_.resize(r);
    for (unsigned c = 0; c < r; ++c) class_weight_[c] = checked_pow(p, c) % modulus_;
    for (unsigned k = 0; k < r; ++k) {
      if (q.alpha.a[k]) {
        sources_[k].push_back({k, 0, 1});
        ++totals_[k];
      }
      std::uint64_t place = 1;
      const auto ds = digits(p, q.alpha.b[k]);
      for (std::size_t j = 0; j < ds.size(); ++j) {
        const unsigned c = static_cast<unsigned>((k + j) % r);
        if (ds[j] > 0) {
          sources_[c].push_back({k, place, ds[j]});
          totals_[c] += ds[j];
        }
        if (j + 1 < ds.size()) place *= p;
      }
    }
  }

  std::optional<std::vector<Monomial>> run() {
    std::vector<std::vector<std::uint64_t>> parts;
    if (!solve(totals_, q_.n, parts)) return std::nullopt;
    return materialize(parts);
  }

 private:
  using Counts = std::vector<std::uint64_t>;

  bool class_ok(const Counts& t) const {
    std::uint64_t w = 0;
    std::uint64_t units = 0;
    for (std::size_t c = 0; c < t.size(); ++c) {
      w = (w + (t[c] % modulus_) * class_weight_[c]) % modulus_;
      units += t[c];
    }
    return units > 0 && w == 0;
  }

  static std::uint64_t total(const Counts& t) { return std::accumulate(t.begin(), t.end(), std::uint64_t{0}); }

  bool solve(const Counts& remaining, std::size_t factors, std::vector<Counts>& chosen) {
    if (total(remaining) < factors) return false;
    if (factors == 1) {
      if (!class_ok(remaining)) return false;
      chosen.push_back(remaining);
      return true;
    }
    const auto key = std::make_pair(remaining, factors);
    if (auto it = dead_.find(key); it != dead_.end()) return false;
    Counts part(remaining.size(), 0);
    while (true) {
      // Odometer over 0 <= part <= remaining.
      std::size_t i = 0;
      while (i < part.size() && part[i] == remaining[i]) part[i++] = 0;
      if (i == part.size()) break;
      ++part[i];
      if (!class_ok(part)) continue;
      Counts rest = remaining;
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= part[c];
      chosen.push_back(part);
      if (solve(rest, factors - 1, chosen)) return true;
      chosen.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  std::vector<Monomial> materialize(const std::vector<Counts>& parts) {
    const unsigned r = q_.ctx.r;
    std::vector<Monomial> factors(parts.size(), Monomial::unit(r));
    for (unsigned c = 0; c < r; ++c) {
      auto pool = sources_[c];
      std::size_t src = 0;
      for (std::size_t f = 0; f < parts.size(); ++f) {
        std::uint64_t need = parts[f][c];
        while (need > 0) {
          auto& s = pool[src];
          const std::uint64_t take = std::min(need, s.count);
          if (s.place == 0) {
            factors[f].a[s.k] = 1;
          } else {
            factors[f].b[s.k] += take * s.place;
          }
          s.count -= take;
          need -= take;
          if (s.count == 0) ++src;
        }
      }
    }
    return factors;
  }

  const ChiQuery& q_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> class_weight_;
  std::vector<std::vector<UnitSource>> sources_;
  Counts totals_;
  std::set<std::pair<Counts, std::size_t>> dead_;
};

}  // namespace

TensorClass chi_basic(const ChiQuery& query) {
  if (query.n == 0) throw std::invalid_argument("chi needs rank n >= 1");
  require_invariant(query.alpha, query.ctx);
  TensorClass out = TensorClass::zero(query.ctx, query.n);
  if (degree(query.alpha, query.ctx.p) == 0) return out;
  const TensorClass full = iterated_coproduct(query.alpha, query.ctx, query.n);
  const Residue sign = modp::sign(query.n - 1, query.ctx.p);
  for (const auto& [tuple, c] : full.terms) {
    if (has_unit_factor(tuple)) continue;
    out.add_term(tuple, modp::mul(sign, c, query.ctx.p));
  }
  return out;
}

std::optional<Residue> term_coefficient(const ChiQuery& query, const std::vector<Monomial>& factors) {
  const auto& ctx = query.ctx;
  require_invariant(query.alpha, ctx);
  if (factors.size() != query.n) return std::nullopt;
  Monomial total = Monomial::unit(ctx.r);
  for (const auto& f : factors) {
    validate(f, ctx);
    if (f.is_unit() || !is_invariant(f, ctx)) return std::nullopt;
    for (unsigned k = 0; k < ctx.r; ++k) {
      total.a[k] = static_cast<std::uint8_t>(total.a[k] + f.a[k]);
      total.b[k] += f.b[k];
    }
  }
  if (total != query.alpha) return std::nullopt;
  Residue c = modp::mul(modp::sign(query.n - 1, ctx.p), shuffle_sign(ctx, factors), ctx.p);
  for (unsigned k = 0; k < ctx.r; ++k) {
    std::vector<std::uint64_t> parts;
    for (const auto& f : factors) parts.push_back(f.b[k]);
    c = modp::mul(c, multinomial_mod_p(ctx.p, parts), ctx.p);
  }
  return c;
}

std::optional<std::vector<Monomial>> find_nonzero_term(const ChiQuery& query) {
  if (query.n == 0) throw std::invalid_argument("chi needs rank n >= 1");
  require_invariant(query.alpha, query.ctx);
  if (degree(query.alpha, query.ctx.p) == 0) return std::nullopt;
  return TermSearch(query).run();
}

bool is_chi_nonzero(const ChiQuery& query) { return find_nonzero_term(query).has_value(); }

std::uint64_t digit_sum(std::uint64_t p, std::uint64_t m) {
  std::uint64_t s = 0;
  for (auto d : digits(p, m)) s += d;
  return s;
}

std::uint64_t min_m_for_digit_sum(std::uint64_t p, std::uint64_t s) {
  const std::uint64_t c = s / (p - 1);
  const std::uint64_t d = s % (p - 1);
  const std::uint64_t pc = checked_pow(p, c);
  if (pc > UINT64_MAX / (d + 1)) throw std::overflow_error("minimal m overflows 64 bits");
  return (d + 1) * pc - 1;
}

std::string to_string(R1Status s) {
  switch (s) {
    case R1Status::nonzero_nonnilpotent:
      return "nonzero-nonnilpotent";
    case R1Status::nonzero:
      return "nonzero";
    case R1Status::zero:
      return "zero";
    case R1Status::undefined:
      return "undefined";
  }
  return "?";
}

R1Status r1_predicate(std::uint64_t p, R1Kind kind, std::uint64_t m, std::size_t n) {
  const std::uint64_t s = digit_sum(p, m);
  if (p == 2) {
    if (kind == R1Kind::xy) throw std::invalid_argument("no class x y^m in characteristic 2");
    return s >= n ? R1Status::nonzero_nonnilpotent : R1Status::zero;
  }
  if (kind == R1Kind::y) {
    if (s % (p - 1) != 0) return R1Status::undefined;
    return s / (p - 1) >= n ? R1Status::nonzero_nonnilpotent : R1Status::zero;
  }
  if ((s + 1) % (p - 1) != 0) return R1Status::undefined;
  return (s + 1) / (p - 1) >= n ? R1Status::nonzero : R1Status::zero;
}

Monomial witness_alpha(std::uint64_t p, unsigned r, std::size_t n, WitnessKind kind) {
  if (n == 0) throw std::invalid_argument("witness needs n >= 1");
  const std::uint64_t pn = checked_pow(p, n);
  Monomial m = Monomial::unit(r);
  if (kind == WitnessKind::y_power) {
    std::fill(m.b.begin(), m.b.end(), pn - 1);
    return m;
  }
  if (p == 2) throw std::invalid_argument("the mixed witness requires odd p");
  std::fill(m.a.begin(), m.a.end(), 1);
  std::fill(m.b.begin(), m.b.end(), pn - pn / p - 1);
  return m;
}

std::vector<Monomial> witness_splitting(std::uint64_t p, unsigned r, std::size_t n, WitnessKind kind) {
  if (kind == WitnessKind::mixed && p == 2) throw std::invalid_argument("the mixed witness requires odd p");
  std::vector<Monomial> factors;
  for (std::size_t i = 1; i <= n; ++i) {
    Monomial f = Monomial::unit(r);
    std::uint64_t b = 0;
    if (kind == WitnessKind::y_power) {
      b = checked_pow(p, i - 1) * (p - 1);
    } else if (i == 1) {
      std::fill(f.a.begin(), f.a.end(), 1);
      b = p - 2;
    } else {
      b = checked_pow(p, i - 2) * ((p - 2) * p + 1);
    }
    std::fill(f.b.begin(), f.b.end(), b);
    factors.push_back(std::move(f));
  }
  return factors;
}

std::uint64_t witness_degree(std::uint64_t p, unsigned r, std::size_t n, WitnessKind kind) {
  const std::uint64_t pn = checked_pow(p, n);
  if (kind == WitnessKind::y_power) return p == 2 ? r * (pn - 1) : 2 * r * (pn - 1);
  if (p == 2) throw std::invalid_argument("the mixed witness requires odd p");
  return r * (2 * pn - 2 * (pn / p) - 1);
}

std::string to_string(ClassStatus s) { return s == ClassStatus::non_nilpotent ? "non-nilpotent" : "nonzero"; }

std::vector<DegreeTableRow> universal_table(std::uint64_t p, unsigned r, std::size_t n,
                                            std::optional<std::uint64_t> digit_bound) {
  const CohContext ctx = CohContext::make(p, r);
  std::vector<std::pair<Monomial, ClassStatus>> classes;
  classes.emplace_back(witness_alpha(p, r, n, WitnessKind::y_power), ClassStatus::non_nilpotent);
  if (p != 2) classes.emplace_back(witness_alpha(p, r, n, WitnessKind::mixed), ClassStatus::nonzero);
  if (digit_bound && r == 1) {
    for (std::uint64_t d = 1; d <= *digit_bound; ++d) {
      if (r1_predicate(p, R1Kind::y, d, n) == R1Status::nonzero_nonnilpotent)
        classes.emplace_back(Monomial::y_power(1, d), ClassStatus::non_nilpotent);
      if (p != 2 && r1_predicate(p, R1Kind::xy, d, n) == R1Status::nonzero) {
        Monomial m = Monomial::y_power(1, d);
        m.a[0] = 1;
        classes.emplace_back(m, ClassStatus::nonzero);
      }
    }
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end(),
                            [](const auto& x, const auto& y) { return x.first == y.first; }),
                classes.end());
  for (const auto& [alpha, status] : classes) {
    if (!is_chi_nonzero({ctx, alpha, n})) {
      throw std::logic_error("table class " + format(alpha, ctx) + " vanishes on the basic representation");
    }
  }
  std::vector<DegreeTableRow> rows;
  const std::uint64_t top = checked_pow(p, n);
  for (std::uint64_t N = 2; N <= top; ++N)
    for (const auto& [alpha, status] : classes) rows.push_back({N, alpha, degree(alpha, p), status});
  return rows;
}

std::vector<TupleCertificate> indecomposable_tuples(std::uint64_t p, std::size_t n, std::uint64_t max_total) {
  if (n == 0) throw std::invalid_argument("tuples need n >= 1");
  const std::uint64_t step = p - 1;
  std::vector<TupleCertificate> out;
  std::vector<std::uint64_t> parts;
  auto recurse = [&](auto&& self, std::uint64_t min_part, std::uint64_t total) -> void {
    if (parts.size() == n) {
      out.push_back({parts, p == 2 ? total : 2 * total});
      return;
    }
    for (std::uint64_t v = min_part; total + v <= max_total; v += step) {
      parts.push_back(v);
      if (no_carry({p, parts})) self(self, v, total + v);
      parts.pop_back();
    }
  };
  recurse(recurse, step, 0);
  std::sort(out.begin(), out.end(), [](const TupleCertificate& x, const TupleCertificate& y) {
    const auto tx = std::accumulate(x.parts.begin(), x.parts.end(), std::uint64_t{0});
    const auto ty = std::accumulate(y.parts.begin(), y.parts.end(), std::uint64_t{0});
    return tx != ty ? tx < ty : x.parts < y.parts;
  });
  return out;
}

bool wedge_split_check(const CohContext& ctx, const Monomial& alpha, std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("wedge check needs a, b >= 1");
  const TensorClass lhs = chi_basic({ctx, alpha, a + b});
  TensorClass rhs = TensorClass::zero(ctx, a + b);
  for (const auto& [pair, c] : coproduct(alpha, ctx).terms) {
    if (degree(pair[0], ctx.p) == 0 || degree(pair[1], ctx.p) == 0) continue;
    rhs = rhs + scale(c, tensor(chi_basic({ctx, pair[0], a}), chi_basic({ctx, pair[1], b})));
  }
  return lhs == -rhs;
}

}  // namespace modchar
