#include "modchar/rep_io.hpp"

#include "modchar/error.hpp"

namespace modchar {

namespace {

std::string at(const std::string& parent, std::size_t i) { return parent + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw InputError(key, "missing required field");
  return obj.at(key);
}

std::uint64_t natural(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InputError(field, "expected an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw InputError(field, "expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

const Json& array(const Json& j, const std::string& field, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw InputError(field, "expected an array");
  if (size && j.size() != *size)
    throw InputError(field, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

FF element(const Field& field, const Json& j, const std::string& name) {
  if (field.r() == 1) {
    if (!j.is_number_integer()) throw InputError(name, "expected an integer entry");
    return field.from_int(j.is_number_unsigned() ? static_cast<std::int64_t>(j.get<std::uint64_t>() % field.p())
                                                 : j.get<std::int64_t>());
  }
  array(j, name, field.r());
  std::vector<std::uint64_t> coeffs;
  for (std::size_t l = 0; l < field.r(); ++l) {
    const auto c = natural(j[l], at(name, l));
    if (c >= field.p()) throw InputError(at(name, l), "coefficient out of range [0, p)");
    coeffs.push_back(c);
  }
  return field.from_coeffs(coeffs);
}

Vector vector_of(const Field& field, const Json& j, const std::string& name, std::size_t dim) {
  array(j, name, dim);
  Vector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(element(field, j[i], at(name, i)));
  return v;
}

}  // namespace

Json to_json(const Monomial& m) {
  Json a = Json::array();
  for (auto v : m.a) a.push_back(int{v});
  return Json{{"A", a}, {"B", m.b}};
}

Monomial monomial_from_json(const Json& j, const CohContext& ctx) {
  if (!j.is_object()) throw InputError("", "monomial must be an object");
  Monomial m = Monomial::unit(ctx.r);
  const auto& a = array(member(j, "A"), "A", ctx.r);
  const auto& b = array(member(j, "B"), "B", ctx.r);
  for (unsigned k = 0; k < ctx.r; ++k) {
    const auto ak = natural(a[k], at("A", k));
    if (ak > 1) throw InputError(at("A", k), "exterior exponent must be 0 or 1");
    m.a[k] = static_cast<std::uint8_t>(ak);
    m.b[k] = natural(b[k], at("B", k));
  }
  try {
    validate(m, ctx);
  } catch (const std::invalid_argument& e) {
    throw InputError("A", e.what());
  }
  return m;
}

Json to_json(const TensorClass& t) {
  Json terms = Json::array();
  for (const auto& [tuple, c] : t.terms) {
    Json factors = Json::array();
    for (const auto& m : tuple) factors.push_back(to_json(m));
    terms.push_back(Json{{"factors", factors}, {"coeff", c}});
  }
  return Json{{"p", t.ctx.p}, {"r", t.ctx.r}, {"n", t.arity}, {"terms", terms}};
}

Json to_json(const MultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json exps = Json::array();
    for (unsigned i = 0; i < f.nvars(); ++i) exps.push_back(e[i]);
    terms.push_back(Json{{"exponents", exps}, {"coeff", c}});
  }
  return Json{{"p", f.p()}, {"nvars", f.nvars()}, {"terms", terms}};
}

Json to_json(const Field& field, const FF& a) {
  if (field.r() == 1) return a.coeffs[0];
  Json out = Json::array();
  for (unsigned l = 0; l < field.r(); ++l) out.push_back(a.coeffs[l]);
  return out;
}

Json to_json(const Rep& rep, const std::optional<Vector>& basepoint) {
  Json out{{"p", rep.field.p()}, {"r", rep.field.r()}};
  if (rep.field.r() > 1) out["modulus"] = rep.field.modulus();
  out["dim"] = rep.dim;
  Json gens = Json::array();
  for (const auto& g : rep.generators) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < g.cols(); ++k) row.push_back(to_json(rep.field, g(i, k)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  out["generators"] = gens;
  if (basepoint) {
    Json v = Json::array();
    for (const auto& a : *basepoint) v.push_back(to_json(rep.field, a));
    out["basepoint"] = v;
  }
  return out;
}

Json to_json(const PointedRep& rep) { return to_json(rep.rep, rep.basepoint); }

RepDocument rep_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("", "representation file must hold a JSON object");
  const auto p = natural(member(j, "p"), "p");
  const auto r = j.contains("r") ? natural(j.at("r"), "r") : 1;
  if (!is_prime(p)) throw InputError("p", "p must be prime");
  if (r < 1 || r > kMaxExtensionDegree) throw InputError("r", "r must lie in [1, 8]");
  std::optional<Field> field;
  try {
    if (j.contains("modulus")) {
      const auto& mj = array(j.at("modulus"), "modulus", r + 1);
      std::vector<std::uint64_t> modulus;
      for (std::size_t i = 0; i <= r; ++i) modulus.push_back(natural(mj[i], at("modulus", i)));
      field.emplace(p, static_cast<unsigned>(r), modulus);
    } else {
      field.emplace(p, static_cast<unsigned>(r));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("modulus", e.what());
  }
  const auto dim = natural(member(j, "dim"), "dim");
  if (dim > 4096) throw InputError("dim", "dimension too large");
  const auto& gens = array(member(j, "generators"), "generators");
  RepDocument doc{{*field, dim, {}}, std::nullopt};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gname = at("generators", g);
    const auto& rows = array(gens[g], gname, dim);
    Matrix m(*field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const Vector row = vector_of(*field, rows[i], at(gname, i), dim);
      for (std::size_t k = 0; k < dim; ++k) m(i, k) = row[k];
    }
    doc.rep.generators.push_back(std::move(m));
  }
  if (j.contains("basepoint")) doc.basepoint = vector_of(*field, j.at("basepoint"), "basepoint", dim);
  return doc;
}

RepDocument rep_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("", std::string("invalid JSON: ") + e.what());
  }
  return rep_from_json(j);
}

}  // namespace modchar
