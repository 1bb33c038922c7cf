#include "modchar/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "modchar/error.hpp"

namespace modchar {

namespace {

void require_compatible(const MultiPoly& x, const MultiPoly& y) {
  if (x.p() != y.p() || x.nvars() != y.nvars()) throw ContextMismatch("polynomials over different rings");
}

Exponents add_exponents(const Exponents& x, const Exponents& y) {
  Exponents out{};
  for (unsigned i = 0; i < kMaxPolyVars; ++i) {
    const unsigned s = unsigned{x[i]} + unsigned{y[i]};
    if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    out[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

}  // namespace

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GradedLex::operator()(const Exponents& x, const Exponents& y) const {
  const unsigned dx = total_degree(x);
  const unsigned dy = total_degree(y);
  if (dx != dy) return dx < dy;
  return x > y;
}

MultiPoly::MultiPoly(std::uint64_t p, unsigned nvars) : p_(p), nvars_(nvars) {
  if (p < 2) throw std::invalid_argument("polynomial characteristic must be at least 2");
  if (nvars > kMaxPolyVars) throw std::invalid_argument("at most 8 polynomial variables are supported");
}

MultiPoly MultiPoly::constant(std::uint64_t p, unsigned nvars, Residue c) {
  MultiPoly f(p, nvars);
  f.add_term(Exponents{}, c);
  return f;
}

MultiPoly MultiPoly::variable(std::uint64_t p, unsigned nvars, unsigned i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  MultiPoly f(p, nvars);
  Exponents e{};
  e[i] = 1;
  f.add_term(e, 1);
  return f;
}

MultiPoly MultiPoly::linear_form(std::uint64_t p, const std::vector<Residue>& coeffs) {
  const auto n = static_cast<unsigned>(coeffs.size());
  MultiPoly f(p, n);
  for (unsigned i = 0; i < n; ++i) {
    Exponents e{};
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

void MultiPoly::add_term(const Exponents& e, Residue c) {
  for (unsigned i = nvars_; i < kMaxPolyVars; ++i)
    if (e[i] != 0) throw std::out_of_range("exponent on a variable beyond nvars");
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = modp::add(it->second, c, p_);
  if (it->second == 0) terms_.erase(it);
}

Residue MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

MultiPoly MultiPoly::component(unsigned d) const {
  MultiPoly out(p_, nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

bool MultiPoly::is_homogeneous() const {
  return terms_.empty() || total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

unsigned MultiPoly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
  require_compatible(x, y);
  MultiPoly out = x;
  for (const auto& [e, c] : y.terms()) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& x) { return scale(x.p() - 1, x); }

MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }

MultiPoly scale(Residue c, const MultiPoly& x) {
  MultiPoly out(x.p(), x.nvars());
  c %= x.p();
  if (c == 0) return out;
  for (const auto& [e, v] : x.terms()) out.add_term(e, modp::mul(c, v, x.p()));
  return out;
}

MultiPoly multiply_truncated(const MultiPoly& x, const MultiPoly& y, unsigned max_degree) {
  require_compatible(x, y);
  MultiPoly out(x.p(), x.nvars());
  for (const auto& [ex, cx] : x.terms()) {
    const unsigned dx = total_degree(ex);
    if (dx > max_degree) break;
    for (const auto& [ey, cy] : y.terms()) {
      if (dx + total_degree(ey) > max_degree) break;
      out.add_term(add_exponents(ex, ey), modp::mul(cx, cy, x.p()));
    }
  }
  return out;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  return multiply_truncated(x, y, std::numeric_limits<unsigned>::max());
}

MultiPoly pow(const MultiPoly& x, std::uint64_t e) {
  MultiPoly result = MultiPoly::constant(x.p(), x.nvars(), 1);
  MultiPoly base = x;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
  if (images.size() != f.nvars()) throw DimensionMismatch("substitution needs one image per variable");
  if (images.empty()) return f;
  const unsigned m = images.front().nvars();
  for (const auto& g : images)
    if (g.p() != f.p() || g.nvars() != m) throw ContextMismatch("substitution images over different rings");
  // Powers of each image are reused across terms.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto image_power = [&](std::size_t j, std::size_t e) -> const MultiPoly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(MultiPoly::constant(f.p(), m, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };
  MultiPoly out(f.p(), m);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(f.p(), m, c);
    for (std::size_t j = 0; j < images.size(); ++j)
      if (e[j] > 0) term = term * image_power(j, e[j]);
    out = out + term;
  }
  return out;
}

std::string format(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (unsigned i = 0; i < f.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += f.nvars() == 1 ? "z" : "z" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + " ";
      out += mono;
    }
  }
  return out;
}

}  // namespace modchar
