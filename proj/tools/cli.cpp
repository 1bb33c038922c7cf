#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "modchar/chi.hpp"
#include "modchar/dickson.hpp"
#include "modchar/error.hpp"
#include "modchar/ff.hpp"
#include "modchar/rep_io.hpp"
#include "modchar/reps.hpp"
#include "modchar/verify.hpp"

namespace modchar::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::uint64_t p = 2;
  unsigned r = 1;
  std::size_t n = 1;
  std::string alpha;
  std::uint64_t max_degree = 10;
  std::optional<unsigned> dmax;
  std::uint64_t max = 20;
  std::optional<std::uint64_t> digit_bound;
  std::string profile = "quick";
  std::string file;
  std::vector<std::uint64_t> ks;
};

struct Outcome {
  int code = kOk;
  std::string text;
};

void require_field_flags(const Options& o) {
  if (!is_prime(o.p)) throw UsageError("--p must be a prime, got " + std::to_string(o.p));
  if (o.r < 1 || o.r > kMaxExtensionDegree) throw UsageError("--r must lie in [1, 8]");
}

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ------------------------------------------------------------------ commands

Outcome cmd_basis(const Options& o) {
  require_field_flags(o);
  const auto ctx = CohContext::make(o.p, o.r);
  std::ostringstream os;
  Json degrees = Json::array();
  if (o.format == "csv") os << "degree,monomial\n";
  for (std::uint64_t d = 0; d <= o.max_degree; ++d) {
    const auto basis = enumerate_invariant_basis(ctx, d);
    if (basis.empty()) continue;
    Json monos = Json::array();
    std::string line;
    for (const auto& m : basis) {
      Json mj = to_json(m);
      mj["text"] = format(m, ctx);
      monos.push_back(mj);
      if (o.format == "csv") os << d << ',' << csv_field(format(m, ctx)) << '\n';
      line += (line.empty() ? "" : ", ") + pretty(m, ctx);
    }
    degrees.push_back(Json{{"degree", d}, {"monomials", monos}});
    if (o.format == "text") os << d << ": " << line << '\n';
  }
  if (o.format == "json") {
    Json j = header("basis");
    j["p"] = o.p;
    j["r"] = o.r;
    j["max_degree"] = o.max_degree;
    j["degrees"] = degrees;
    os << dump(j);
  }
  return {kOk, os.str()};
}

Outcome cmd_chi(const Options& o) {
  require_field_flags(o);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const auto ctx = CohContext::make(o.p, o.r);
  const Monomial alpha = parse_monomial(o.alpha, ctx);
  const TensorClass t = chi_basic({ctx, alpha, o.n});
  std::ostringstream os;
  if (o.format == "json") {
    Json j = header("chi");
    j["p"] = o.p;
    j["r"] = o.r;
    j["n"] = o.n;
    j["alpha"] = to_json(alpha);
    j["class"] = to_json(t);
    j["text"] = t.is_zero() ? "0" : pretty(t);
    os << dump(j);
  } else if (o.format == "csv") {
    os << "coeff,term\n";
    for (const auto& [tuple, c] : t.terms) {
      std::string term;
      for (const auto& m : tuple) term += (term.empty() ? "" : " (x) ") + format(m, ctx);
      os << c << ',' << csv_field(term) << '\n';
    }
  } else {
    os << (t.is_zero() ? "0" : pretty(t)) << '\n';
  }
  return {kOk, os.str()};
}

Outcome cmd_nonvanish(const Options& o) {
  require_field_flags(o);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.digit_bound && o.r != 1) throw UsageError("--digit-bound needs --r 1");
  const auto ctx = CohContext::make(o.p, o.r);
  const auto rows = universal_table(o.p, o.r, o.n, o.digit_bound);
  std::ostringstream os;
  if (o.format == "json") {
    Json j = header("nonvanish");
    j["p"] = o.p;
    j["r"] = o.r;
    j["n"] = o.n;
    j["columns"] = {"N", "alpha", "degree", "status"};
    Json list = Json::array();
    for (const auto& row : rows)
      list.push_back(Json{{"N", row.N}, {"alpha", format(row.alpha, ctx)}, {"degree", row.degree},
                          {"status", to_string(row.status)}});
    j["rows"] = list;
    os << dump(j);
  } else if (o.format == "csv") {
    os << "N,alpha,degree,status\n";
    for (const auto& row : rows)
      os << row.N << ',' << csv_field(format(row.alpha, ctx)) << ',' << row.degree << ',' << to_string(row.status) << '\n';
  } else {
    for (const auto& row : rows)
      os << "N=" << row.N << "  " << pretty(row.alpha, ctx) << "  degree " << row.degree << "  " << to_string(row.status)
         << '\n';
  }
  return {kOk, os.str()};
}

Outcome cmd_dickson(const Options& o) {
  if (!is_prime(o.p)) throw UsageError("--p must be a prime");
  if (o.n < 1 || o.n > 4) throw UsageError("--n must lie in [1, 4]");
  const auto n = static_cast<unsigned>(o.n);
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) pn *= o.p;
  if (pn > 1000) throw UsageError("p^n too large for the Dickson computation");
  const auto top = static_cast<unsigned>(pn - 1);
  const unsigned dmax = o.dmax.value_or(3 * top);
  if (dmax < top) throw UsageError("--dmax must be at least p^n - 1 = " + std::to_string(top));

  const TotalClass d = dickson_total(o.p, n);
  const bool newton = newton_check(o.p, n, dmax);
  const bool inverse = a_from_inverse(o.p, n, dmax) == total_A(o.p, n, dmax);
  struct Product {
    unsigned i;
    std::uint64_t k;
    std::optional<int> sign;
  };
  std::vector<Product> products;
  std::vector<std::uint64_t> expected_nonzero;
  for (unsigned i = 0; i <= n; ++i) {
    Product pr{i, product_identity_degree(o.p, n, i), std::nullopt};
    try {
      pr.sign = product_identity_check(o.p, n, i);
    } catch (const std::logic_error&) {
    }
    products.push_back(pr);
    expected_nonzero.push_back(pr.k);
  }
  std::sort(expected_nonzero.begin(), expected_nonzero.end());
  const auto found = nonzero_power_sum_degrees(o.p, n, 2 * top);
  const bool scan = found == expected_nonzero;
  const bool products_ok = std::all_of(products.begin(), products.end(), [](const Product& x) { return x.sign.has_value(); });
  const bool ok = newton && inverse && products_ok && scan;

  std::ostringstream os;
  if (o.format == "json") {
    Json j = header("dickson");
    j["p"] = o.p;
    j["n"] = n;
    j["dmax"] = dmax;
    Json comps = Json::array();
    for (unsigned k = 0; k <= top; ++k)
      if (!d[k].is_zero()) comps.push_back(Json{{"degree", k}, {"text", format(d[k])}, {"poly", to_json(d[k])}});
    j["components"] = comps;
    j["newton"] = newton;
    j["inverse"] = inverse;
    Json prods = Json::array();
    for (const auto& pr : products) {
      Json pj{{"i", pr.i}, {"k", pr.k}};
      pj["sign"] = pr.sign ? Json(*pr.sign) : Json(nullptr);
      prods.push_back(pj);
    }
    j["products"] = prods;
    j["scan"] = Json{{"nonzero_degrees", found}, {"ok", scan}};
    if (n == 2) {
      const auto w = algebraic_independence_witness(o.p, n, 3);
      j["independence"] = Json{{"products", w.products}, {"rank", w.rank}, {"independent", w.independent()}};
    }
    j["ok"] = ok;
    os << dump(j);
  } else if (o.format == "csv") {
    os << "check,i,k,result\n";
    os << "newton,,," << (newton ? "ok" : "FAIL") << '\n';
    os << "inverse,,," << (inverse ? "ok" : "FAIL") << '\n';
    for (const auto& pr : products)
      os << "product," << pr.i << ',' << pr.k << ',' << (pr.sign ? (*pr.sign > 0 ? "+1" : "-1") : "FAIL") << '\n';
    os << "scan,,," << (scan ? "ok" : "FAIL") << '\n';
  } else {
    // Group indices by sign: "sign=+1 (i=0,1), sign=-1 (i=2)".
    std::map<int, std::vector<unsigned>> by_sign;
    std::vector<unsigned> failed;
    for (const auto& pr : products) {
      if (pr.sign) {
        by_sign[-*pr.sign].push_back(pr.i);
      } else {
        failed.push_back(pr.i);
      }
    }
    auto join = [](const std::vector<unsigned>& v) {
      std::string s;
      for (auto i : v) s += (s.empty() ? "" : ",") + std::to_string(i);
      return s;
    };
    std::string prod;
    for (const auto& [neg, idx] : by_sign)
      prod += (prod.empty() ? "" : ", ") + std::string("sign=") + (neg < 0 ? "+1" : "-1") + " (i=" + join(idx) + ")";
    if (!failed.empty()) prod += (prod.empty() ? "" : ", ") + std::string("FAIL (i=") + join(failed) + ")";
    os << "newton: " << (newton ? "ok" : "FAIL") << ", inverse: " << (inverse ? "ok" : "FAIL") << ", products: " << prod;
    if (!scan) os << ", scan: FAIL";
    os << '\n';
  }
  return {ok ? kOk : kCheckFailure, os.str()};
}

Outcome cmd_tuples(const Options& o) {
  if (!is_prime(o.p)) throw UsageError("--p must be a prime");
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const auto tuples = indecomposable_tuples(o.p, o.n, o.max);
  std::ostringstream os;
  auto parts_text = [](const TupleCertificate& t, const char* sep) {
    std::string s;
    for (auto v : t.parts) s += (s.empty() ? "" : sep) + std::to_string(v);
    return s;
  };
  if (o.format == "json") {
    Json j = header("tuples");
    j["p"] = o.p;
    j["n"] = o.n;
    j["max"] = o.max;
    Json list = Json::array();
    for (const auto& t : tuples) list.push_back(Json{{"parts", t.parts}, {"degree", t.homology_degree}});
    j["tuples"] = list;
    os << dump(j);
  } else if (o.format == "csv") {
    os << "parts,degree\n";
    for (const auto& t : tuples) os << parts_text(t, ";") << ',' << t.homology_degree << '\n';
  } else {
    for (const auto& t : tuples) os << '(' << parts_text(t, ",") << ") degree " << t.homology_degree << '\n';
  }
  return {kOk, os.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m.field().format(m(i, j));
    s += "]";
  }
  return s + "]";
}

Outcome cmd_rep(const Options& o, const std::string& contents) {
  const RepDocument doc = rep_from_text(contents);
  if (doc.basepoint) {
    require_valid(PointedRep{doc.rep, *doc.basepoint});
  } else {
    require_valid(doc.rep);
  }
  if (!o.ks.empty() && doc.rep.field.r() != 1)
    throw std::invalid_argument("chi of a representation is only computed for r = 1; no closed form is available for r > 1");
  const ChiReduction red = classify(doc.rep);
  std::vector<std::pair<std::uint64_t, MultiPoly>> chis;
  for (auto k : o.ks) chis.emplace_back(k, chi_of_rep(doc.rep, k));

  std::ostringstream os;
  std::string dims;
  for (auto d : red.j_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  if (o.format == "json") {
    Json j = header("rep");
    j["p"] = doc.rep.field.p();
    j["r"] = doc.rep.field.r();
    j["dim"] = doc.rep.dim;
    j["rank"] = doc.rep.rank();
    j["j_dims"] = red.j_dims;
    j["verdict"] = red.verdict == Verdict::zero ? "Zero" : "Reduced";
    j["dim_j0"] = red.dim_j0;
    if (red.verdict == Verdict::reduced) {
      j["quotient_rank"] = red.quotient_rank;
      Json rows = Json::array();
      for (std::size_t i = 0; i < red.projection->rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < red.projection->cols(); ++c) row.push_back((*red.projection)(i, c).coeffs[0]);
        rows.push_back(row);
      }
      j["projection"] = rows;
    }
    Json list = Json::array();
    for (const auto& [k, f] : chis) list.push_back(Json{{"k", k}, {"text", format(f)}, {"poly", to_json(f)}});
    j["chi"] = list;
    os << dump(j);
  } else if (o.format == "csv") {
    os << "field,value\n";
    os << "j_dims," << csv_field(dims) << '\n';
    os << "verdict," << (red.verdict == Verdict::zero ? "Zero" : "Reduced") << '\n';
    os << "dim_j0," << red.dim_j0 << '\n';
    if (red.verdict == Verdict::reduced) {
      os << "quotient_rank," << red.quotient_rank << '\n';
      os << "projection," << csv_field(matrix_text(*red.projection)) << '\n';
    }
    for (const auto& [k, f] : chis) os << "chi[y^" << k << "]," << csv_field(format(f)) << '\n';
  } else {
    os << "J dims " << dims << "; ";
    if (red.verdict == Verdict::zero) {
      os << "Zero (dim J₀ = " << red.dim_j0 << ")";
    } else {
      os << "Reduced rank " << red.quotient_rank;
    }
    for (const auto& [k, f] : chis) os << "; chi[y^" << k << "] = " << format(f);
    os << '\n';
    if (red.verdict == Verdict::reduced) os << "projection " << matrix_text(*red.projection) << '\n';
  }
  return {kOk, os.str()};
}

Outcome cmd_verify(const Options& o) {
  verify::Profile profile;
  if (o.profile == "quick") {
    profile = verify::Profile::quick;
  } else if (o.profile == "full") {
    profile = verify::Profile::full;
  } else {
    throw UsageError("--profile must be quick or full");
  }
  const auto results = verify::run_all(profile);
  std::ostringstream os;
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  if (o.format == "json") {
    Json j = header("verify");
    j["profile"] = o.profile;
    Json suites = Json::array();
    for (const auto& r : results)
      suites.push_back(Json{{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed}, {"checks", r.checks},
                            {"seconds", r.seconds}, {"failures", r.failures}});
    j["suites"] = suites;
    j["ok"] = failed == 0;
    os << dump(j);
  } else {
    for (const auto& r : results) {
      os << (r.passed ? "[PASS] " : "[FAIL] ") << r.criterion << ' ' << r.name << " (" << r.checks << " checks, "
         << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
      for (const auto& f : r.failures) os << "       " << f << '\n';
    }
    os << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << '\n';
  }
  return {failed == 0 ? kOk : kCheckFailure, os.str()};
}

// ------------------------------------------------------------------ cache

std::optional<fs::path> cache_dir(const Options& o) {
  if (const char* env = std::getenv("MODCHAR_CACHE"); env && *env) return fs::path(env);
  if (!o.cache_dir.empty()) return fs::path(o.cache_dir);
  return std::nullopt;
}

std::string cache_key(const CLI::App& sub, const Options& o, const std::string& extra) {
  std::vector<std::string> flags;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string item = opt->get_name() + "=";
    for (const auto& v : opt->results()) item += v + ";";
    flags.push_back(item);
  }
  std::sort(flags.begin(), flags.end());
  std::string key = std::string("modchar ") + kVersion + "\n" + sub.get_name() + "\nformat=" + o.format + "\n";
  for (const auto& f : flags) key += f + "\n";
  return key + extra;
}

std::optional<Outcome> cache_load(const fs::path& file, const std::string& key) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    if (j.at("key") != key) return std::nullopt;
    return Outcome{j.at("exit").get<int>(), j.at("output").get<std::string>()};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const fs::path& dir, const fs::path& file, const std::string& key, const Outcome& outcome) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = file.string() + ".tmp" + std::to_string(std::hash<std::string>{}(key) ^ std::rand());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << Json{{"key", key}, {"exit", outcome.code}, {"output", outcome.text}}.dump();
    if (!out) return;
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Modular characteristic classes of representations over finite fields", "modchar"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", o.cache_dir, "Result cache directory (MODCHAR_CACHE overrides)");

  auto* basis = app.add_subcommand("basis", "Invariant monomial basis of H*(GL_2 F_q) by degree");
  basis->add_option("--p", o.p, "Characteristic")->required();
  basis->add_option("--r", o.r, "Extension degree, q = p^r");
  basis->add_option("--max-degree", o.max_degree, "Largest degree listed");

  auto* chi = app.add_subcommand("chi", "chi_alpha of the basic representation of F_q^n");
  chi->add_option("--p", o.p, "Characteristic")->required();
  chi->add_option("--r", o.r, "Extension degree");
  chi->add_option("--n", o.n, "Rank of the group F_q^n")->required();
  chi->add_option("--alpha", o.alpha, "Monomial, e.g. \"x y^4\" or \"y0 y1\"")->required();

  auto* nonvanish = app.add_subcommand("nonvanish", "Degree table of nonzero universal classes");
  nonvanish->add_option("--p", o.p, "Characteristic")->required();
  nonvanish->add_option("--r", o.r, "Extension degree");
  nonvanish->add_option("--n", o.n, "Rank")->required();
  nonvanish->add_option("--digit-bound", o.digit_bound, "Also list chi_{y^d}, chi_{xy^d} for d up to this bound (r = 1)");

  auto* dickson = app.add_subcommand("dickson", "Dickson invariant identities for r = 1");
  dickson->add_option("--p", o.p, "Characteristic")->required();
  dickson->add_option("--n", o.n, "Number of variables")->required();
  dickson->add_option("--dmax", o.dmax, "Truncation degree (default 3(p^n - 1))");

  auto* tuples = app.add_subcommand("tuples", "Carry-free tuples of multiples of p - 1");
  tuples->add_option("--p", o.p, "Characteristic")->required();
  tuples->add_option("--n", o.n, "Tuple length")->required();
  tuples->add_option("--max", o.max, "Largest total");

  auto* rep = app.add_subcommand("rep", "Analyze a representation file");
  rep->add_option("file", o.file, "Representation JSON file")->required();
  rep->add_option("--k", o.ks, "Compute chi_{y^k} for these k (r = 1)")->delimiter(',');

  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check suites");
  verify_cmd->add_option("--profile", o.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    std::string extra;
    if (sub == rep) extra = read_file(o.file);

    const bool cacheable = sub != verify_cmd;
    const auto dir = cacheable ? cache_dir(o) : std::nullopt;
    std::string key;
    fs::path file;
    if (dir) {
      key = cache_key(*sub, o, extra);
      file = *dir / (fnv1a_hex(key) + ".json");
      if (auto hit = cache_load(file, key)) {
        out << hit->text;
        return hit->code;
      }
    }

    Outcome outcome;
    if (sub == basis) outcome = cmd_basis(o);
    else if (sub == chi) outcome = cmd_chi(o);
    else if (sub == nonvanish) outcome = cmd_nonvanish(o);
    else if (sub == dickson) outcome = cmd_dickson(o);
    else if (sub == tuples) outcome = cmd_tuples(o);
    else if (sub == rep) outcome = cmd_rep(o, extra);
    else outcome = cmd_verify(o);

    out << outcome.text;
    if (dir) cache_store(*dir, file, key, outcome);
    return outcome.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kInputError;
  } catch (const modchar::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotInvariant& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace modchar::cli
