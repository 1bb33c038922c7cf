#include "modchar/coalg.hpp"

#include <stdexcept>

#include "modchar/error.hpp"

namespace modchar {

namespace {

// C(n, k) mod p for 0 <= k <= n < p.
Residue small_binomial(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Residue num = 1 % p;
  Residue den = 1 % p;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = modp::mul(num, (n - i) % p, p);
    den = modp::mul(den, (i + 1) % p, p);
  }
  return modp::mul(num, modp::inv(den, p), p);
}

// All b' whose base-p digits are bounded by those of b (the nonzero C(b, b') mod p).
std::vector<std::uint64_t> dominated(std::uint64_t p, std::uint64_t b) {
  std::vector<std::uint64_t> out{0};
  std::uint64_t place = 1;
  for (auto d : digits(p, b)) {
    const std::size_t n = out.size();
    for (std::uint64_t v = 1; v <= d; ++v)
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + v * place);
    if (place > UINT64_MAX / p) break;
    place *= p;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> digits(std::uint64_t p, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  while (m > 0) {
    out.push_back(m % p);
    m /= p;
  }
  return out;
}

Residue lucas_binomial(std::uint64_t p, std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  Residue result = 1 % p;
  while (m > 0 || k > 0) {
    const std::uint64_t mi = m % p;
    const std::uint64_t ki = k % p;
    if (ki > mi) return 0;
    result = modp::mul(result, small_binomial(p, mi, ki), p);
    m /= p;
    k /= p;
  }
  return result;
}

bool no_carry(const CarryProfile& cp) {
  auto parts = cp.parts;
  while (true) {
    bool any = false;
    std::uint64_t column = 0;
    for (auto& part : parts) {
      column += part % cp.p;
      part /= cp.p;
      any = any || part > 0;
    }
    if (column >= cp.p) return false;
    if (!any) return true;
  }
}

Residue multinomial_mod_p(std::uint64_t p, std::span<const std::uint64_t> parts) {
  Residue result = 1 % p;
  std::uint64_t running = 0;
  for (auto part : parts) {
    if (running > UINT64_MAX - part) throw std::overflow_error("multinomial total overflows 64 bits");
    running += part;
    result = modp::mul(result, lucas_binomial(p, running, part), p);
    if (result == 0) return 0;
  }
  return result;
}

Residue shuffle_sign(const CohContext& ctx, std::span<const Monomial> factors) {
  if (ctx.p == 2) return 1;
  std::uint64_t inversions = 0;
  std::vector<std::size_t> owner;
  for (unsigned k = 0; k < ctx.r; ++k) {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (factors[f].a[k]) {
        owner.push_back(f);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < owner.size(); ++i)
    for (std::size_t j = i + 1; j < owner.size(); ++j)
      if (owner[i] > owner[j]) ++inversions;
  return modp::sign(inversions, ctx.p);
}

TensorClass coproduct(const Monomial& m, const CohContext& ctx) {
  require_invariant(m, ctx);
  const unsigned r = ctx.r;
  std::vector<std::vector<std::uint64_t>> b_choices(r);
  for (unsigned k = 0; k < r; ++k) b_choices[k] = dominated(ctx.p, m.b[k]);

  TensorClass out = TensorClass::zero(ctx, 2);
  Monomial left = Monomial::unit(r);
  Monomial right = Monomial::unit(r);
  auto recurse = [&](auto&& self, unsigned k) -> void {
    if (k == r) {
      if (!is_invariant(left, ctx)) return;
      const Monomial pair[2] = {left, right};
      Residue c = shuffle_sign(ctx, pair);
      for (unsigned j = 0; j < r; ++j) c = modp::mul(c, lucas_binomial(ctx.p, m.b[j], left.b[j]), ctx.p);
      out.add_term({left, right}, c);
      return;
    }
    for (std::uint8_t a_left = 0; a_left <= m.a[k]; ++a_left) {
      left.a[k] = a_left;
      right.a[k] = static_cast<std::uint8_t>(m.a[k] - a_left);
      for (auto bl : b_choices[k]) {
        left.b[k] = bl;
        right.b[k] = m.b[k] - bl;
        self(self, k + 1);
      }
    }
  };
  recurse(recurse, 0);
  return out;
}

TensorClass apply_coproduct_at(const TensorClass& t, std::size_t position) {
  if (position >= t.arity) throw std::out_of_range("coproduct position beyond tensor arity");
  TensorClass out = TensorClass::zero(t.ctx, t.arity + 1);
  for (const auto& [tuple, c] : t.terms) {
    const TensorClass split = coproduct(tuple[position], t.ctx);
    for (const auto& [pair, cs] : split.terms) {
      TensorClass::Tuple next;
      next.reserve(t.arity + 1);
      next.insert(next.end(), tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(position));
      next.push_back(pair[0]);
      next.push_back(pair[1]);
      next.insert(next.end(), tuple.begin() + static_cast<std::ptrdiff_t>(position) + 1, tuple.end());
      out.add_term(next, modp::mul(c, cs, t.ctx.p));
    }
  }
  return out;
}

TensorClass iterated_coproduct(const Monomial& m, const CohContext& ctx, std::size_t n) {
  if (n == 0) throw std::invalid_argument("iterated coproduct needs arity n >= 1");
  require_invariant(m, ctx);
  TensorClass t = TensorClass::of(ctx, {m});
  for (std::size_t k = 1; k < n; ++k) t = apply_coproduct_at(t, 0);
  return t;
}

Residue counit(const CohClass& c) {
  auto it = c.terms.find(Monomial::unit(c.ctx.r));
  return it == c.terms.end() ? 0 : it->second;
}

boost::multiprecision::cpp_int gaussian_binomial(std::uint64_t q, unsigned a, unsigned b) {
  using boost::multiprecision::cpp_int;
  if (b > a) return 0;
  cpp_int num = 1;
  cpp_int den = 1;
  for (unsigned i = 1; i <= b; ++i) {
    num *= boost::multiprecision::pow(cpp_int(q), a - i + 1) - 1;
    den *= boost::multiprecision::pow(cpp_int(q), i) - 1;
  }
  if (num % den != 0) throw std::logic_error("Gaussian binomial quotient is not integral");
  return num / den;
}

}  // namespace modchar
