// waring: command-line front end over the libwaring C API.
//
// Every result is one JSON object on stdout carrying "seed", "tolerances" and
// "version". Exit codes: 0 success, 2 rejected or degenerate sample, 1 usage,
// parse or precondition error.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "waring/waring.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitRejected = 2;

// Carries a C API status out of nested helpers.
struct ApiError {
  waring_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(waring_status s) {
  if (s != WARING_OK) throw ApiError{s, waring_last_error()};
}

struct FormDeleter {
  void operator()(waring_form* f) const { waring_form_free(f); }
};
struct DecDeleter {
  void operator()(waring_decomposition* d) const { waring_decomposition_free(d); }
};
struct SampleDeleter {
  void operator()(waring_sample* s) const { waring_sample_free(s); }
};
using Form = std::unique_ptr<waring_form, FormDeleter>;
using Dec = std::unique_ptr<waring_decomposition, DecDeleter>;
using Sample = std::unique_ptr<waring_sample, SampleDeleter>;

// Takes ownership of a C string returned by the library and parses it.
json take_json(char* raw) {
  std::string text(raw);
  waring_string_free(raw);
  return json::parse(text);
}

template <class Fn>
json call_json(Fn&& fn) {
  char* out = nullptr;
  check(fn(&out));
  return take_json(out);
}

struct Config {
  uint64_t seed = 0;
  bool pretty = false;
  std::string input = "-";
  std::string output = "-";
  waring_tolerances tol = waring_default_tolerances();
};

json metadata(const Config& cfg, uint64_t seed) {
  return {{"seed", seed},
          {"tolerances", call_json([&](char** o) { return waring_tolerances_json(&cfg.tol, o); })},
          {"version", waring_version()}};
}

std::string dump(const json& j, const Config& cfg) { return cfg.pretty ? j.dump(2) : j.dump(); }

class Output {
 public:
  explicit Output(const Config& cfg) : cfg_(cfg) {
    if (cfg.output != "-") {
      file_.open(cfg.output);
      if (!file_) throw UsageError{"cannot open output file " + cfg.output};
    }
  }
  void emit(json j, uint64_t seed) {
    const json meta = metadata(cfg_, seed);
    for (const auto& [k, v] : meta.items()) j[k] = v;
    stream() << dump(j, cfg_) << '\n';
  }

 private:
  std::ostream& stream() { return cfg_.output == "-" ? std::cout : file_; }
  const Config& cfg_;
  std::ofstream file_;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open input file " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError{"malformed JSON in " + source + " at byte " + std::to_string(e.byte)};
  }
}

json read_json(const std::string& path) { return parse_json(read_text(path), path == "-" ? "stdin" : path); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError{std::string("input is missing \"") + key + "\""};
  return j.at(key);
}

// Accepts a bare form object or any object with a "form" field.
Form form_of(const json& j) {
  const json& fj = (j.is_object() && j.contains("form")) ? j.at("form") : j;
  waring_form* f = nullptr;
  check(waring_form_from_json(fj.dump().c_str(), &f));
  return Form(f);
}

Dec decomposition_of(const json& j, const Config& cfg) {
  waring_decomposition* d = nullptr;
  check(waring_decomposition_from_json(j.dump().c_str(), &cfg.tol, &d));
  return Dec(d);
}

// Complex coordinates from "1,2,3" (real parts) as interleaved doubles.
std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw UsageError{"bad number '" + item + "' in --u"};
    out.push_back(v);
    out.push_back(0.0);
  }
  return out;
}

void push_complex(const json& c, std::vector<double>& out) {
  if (c.is_number()) {
    out.push_back(c.get<double>());
    out.push_back(0.0);
  } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
    out.push_back(c[0].get<double>());
    out.push_back(c[1].get<double>());
  } else {
    throw UsageError{"expected a complex number, got " + c.dump()};
  }
}

// [h1, h2] or {"h1": ..., "h2": ...} as 12 interleaved complex coordinates.
std::vector<double> plane_of(const json& j) {
  json pair = j;
  if (j.is_object()) pair = json::array({field(j, "h1"), field(j, "h2")});
  if (!pair.is_array() || pair.size() != 2) throw UsageError{"a conic plane is two functionals"};
  std::vector<double> out;
  for (const auto& h : pair) {
    if (!h.is_array() || h.size() != 6) throw UsageError{"a conic plane functional has 6 coordinates"};
    for (const auto& c : h) push_complex(c, out);
  }
  return out;
}

json sample_json(const Sample& s) {
  return call_json([&](char** o) { return waring_sample_to_json(s.get(), o); });
}

json form_json(const waring_form* f) {
  return call_json([&](char** o) { return waring_form_to_json(f, o); });
}

json dec_json(const waring_decomposition* d) {
  return call_json([&](char** o) { return waring_decomposition_to_json(d, o); });
}

// ---- subcommands -------------------------------------------------------------

struct GenArgs {
  int n = 2;
  int d = 3;
  std::optional<int> rank;
};

int run_gen(const Config& cfg, const GenArgs& a) {
  Output out(cfg);
  json result;
  if (a.rank) {
    waring_decomposition* d = nullptr;
    check(waring_decomposition_random(a.n, a.d, *a.rank, cfg.seed, &d));
    Dec dec(d);
    waring_form* f = nullptr;
    check(waring_form_synthesize(dec.get(), a.n, &f));
    Form form(f);
    result = form_json(form.get());
    result["decomposition"] = dec_json(dec.get());
  } else {
    waring_form* f = nullptr;
    check(waring_form_random(a.n, a.d, cfg.seed, &f));
    Form form(f);
    result = form_json(form.get());
  }
  out.emit(result, cfg.seed);
  return kExitOk;
}

struct DecomposeArgs {
  std::string method;
  std::optional<int> h;
  std::optional<std::string> u;
  std::optional<std::string> pencil;
  std::optional<std::string> plane;
};

int run_decompose(const Config& cfg, const DecomposeArgs& a) {
  const json in = read_json(cfg.input);
  Form f = form_of(in);
  const int n = waring_form_n(f.get()), d = waring_form_degree(f.get());
  waring_sample* raw = nullptr;
  const std::string& m = a.method;
  if (m == "sylvester") {
    const int h = a.h.value_or((d + 2) / 2);
    if (a.u) {
      const auto u = parse_vector(*a.u);
      check(waring_sylvester(f.get(), h, u.data(), u.size() / 2, &cfg.tol, &raw));
    } else {
      check(waring_sample_seeded(f.get(), "sylvester", h, cfg.seed, &cfg.tol, &raw));
    }
  } else if (m == "dk") {
    if (a.u) {
      const auto u = parse_vector(*a.u);
      check(waring_plane_cubic4(f.get(), u.data(), u.size() / 2, &cfg.tol, &raw));
    } else {
      check(waring_sample_seeded(f.get(), "dk", 4, cfg.seed, &cfg.tol, &raw));
    }
  } else if (m == "pencil") {
    if (a.pencil) {
      Form g = form_of(read_json(*a.pencil));
      check(waring_pencil(f.get(), g.get(), &cfg.tol, &raw));
    } else {
      check(waring_sample_seeded(f.get(), "pencil", n + 1, cfg.seed, &cfg.tol, &raw));
    }
  } else if (m == "conic") {
    if (a.plane) {
      const auto p = plane_of(read_json(*a.plane));
      check(waring_conic4(f.get(), p.data(), p.size() / 2, &cfg.tol, &raw));
    } else {
      check(waring_sample_seeded(f.get(), "conic", 4, cfg.seed, &cfg.tol, &raw));
    }
  } else if (m == "quadric") {
    check(waring_sample_seeded(f.get(), "quadric", a.h.value_or(n + 1), cfg.seed, &cfg.tol, &raw));
  } else {
    throw UsageError{"unknown method '" + m + "'"};
  }
  Sample s(raw);
  json result = sample_json(s);
  result["form"] = form_json(f.get());
  Output(cfg).emit(result, cfg.seed);
  return kExitOk;
}

int run_verify(const Config& cfg) {
  const json in = read_json(cfg.input);
  Form f = form_of(field(in, "form"));
  Dec dec = decomposition_of(field(in, "decomposition"), cfg);
  int verdict = 0;
  json result = call_json([&](char** o) { return waring_verify_polyhedron(f.get(), dec.get(), &cfg.tol, &verdict, o); });
  Output(cfg).emit(result, cfg.seed);
  return verdict ? kExitOk : kExitRejected;
}

int run_apolar(const Config& cfg, int t, bool matrix) {
  Form f = form_of(read_json(cfg.input));
  json result = call_json([&](char** o) {
    return matrix ? waring_catalecticant_json(f.get(), t, &cfg.tol, o) : waring_apolar_space_json(f.get(), t, &cfg.tol, o);
  });
  Output(cfg).emit(result, cfg.seed);
  return kExitOk;
}

int run_vsp_dim(const Config& cfg) {
  const json in = read_json(cfg.input);
  Form f = form_of(field(in, "form"));
  Dec dec = decomposition_of(field(in, "decomposition"), cfg);
  int dim = 0;
  check(waring_tangent_dimension(f.get(), dec.get(), &cfg.tol, &dim));
  const int n = waring_form_n(f.get()), d = waring_form_degree(f.get()), h = waring_decomposition_size(dec.get());
  json result = {{"n", n}, {"d", d}, {"h", h}, {"tangent_dim", dim}, {"vsp_dim_formula", waring_vsp_dim_formula(n, d, h)}};
  Output(cfg).emit(result, cfg.seed);
  return kExitOk;
}

int run_secant_dim(const Config& cfg, int n, int d, int h) {
  json result = call_json([&](char** o) { return waring_secant_report_json(n, d, h, cfg.seed, &cfg.tol, o); });
  Output(cfg).emit(result, cfg.seed);
  return kExitOk;
}

// Runs jobs concurrently; results land in index order.
template <class Result>
std::vector<Result> run_ordered(int count, int jobs, const std::function<Result(int)>& job) {
  std::vector<Result> results(static_cast<size_t>(count));
  const int workers = std::max(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int k = w; k < count; k += workers) results[static_cast<size_t>(k)] = job(k);
    });
  for (auto& t : pool) t.join();
  return results;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError{"bad range '" + text + "' (expected a or a:b)"};
  }
}

struct Outcome {
  json value;
  waring_status status = WARING_OK;
  std::string error;
};

Outcome guarded(const std::function<json()>& fn) {
  try {
    return {fn(), WARING_OK, {}};
  } catch (const ApiError& e) {
    return {json(), e.status, e.message};
  }
}

int run_secant_table(const Config& cfg, const std::string& grid, int jobs) {
  std::vector<std::string> parts;
  std::stringstream ss(grid);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError{"--grid takes n0:n1,d0:d1,h0:h1"};
  const auto [n0, n1] = parse_range(parts[0]);
  const auto [d0, d1] = parse_range(parts[1]);
  const auto [h0, h1] = parse_range(parts[2]);
  std::vector<std::array<int, 3>> cells;
  for (int n = n0; n <= n1; ++n)
    for (int d = d0; d <= d1; ++d)
      for (int h = h0; h <= h1; ++h) cells.push_back({n, d, h});
  const auto results = run_ordered<Outcome>(static_cast<int>(cells.size()), jobs, [&](int k) {
    const auto& c = cells[static_cast<size_t>(k)];
    return guarded(
        [&] { return call_json([&](char** o) { return waring_secant_report_json(c[0], c[1], c[2], cfg.seed, &cfg.tol, o); }); });
  });
  Output out(cfg);
  int code = kExitOk;
  for (const auto& r : results) {
    if (r.status != WARING_OK) {
      std::cerr << "error: " << r.error << '\n';
      code = kExitFailure;
      continue;
    }
    out.emit(r.value, cfg.seed);
  }
  return code;
}

int run_sample(const Config& cfg, const std::string& method, std::optional<int> h, int trials, int jobs) {
  if (trials < 1) throw UsageError{"--trials must be positive"};
  Form f = form_of(read_json(cfg.input));
  const int hh = h.value_or(method == "sylvester" ? (waring_form_degree(f.get()) + 2) / 2 : method == "pencil" || method == "quadric" ? waring_form_n(f.get()) + 1 : 4);
  const auto results = run_ordered<Outcome>(trials, jobs, [&](int k) {
    const uint64_t seed = waring_derive_seed(cfg.seed, static_cast<uint64_t>(k));
    return guarded([&] {
      waring_sample* raw = nullptr;
      check(waring_sample_seeded(f.get(), method.c_str(), hh, seed, &cfg.tol, &raw));
      Sample s(raw);
      json j = sample_json(s);
      j["trial"] = k;
      j["trial_seed"] = seed;
      return j;
    });
  });
  Output out(cfg);
  int code = kExitOk;
  for (int k = 0; k < trials; ++k) {
    const Outcome& r = results[static_cast<size_t>(k)];
    if (r.status == WARING_OK) {
      out.emit(r.value, cfg.seed);
      continue;
    }
    if (r.status != WARING_ERR_REJECTED) throw ApiError{r.status, r.error};
    out.emit({{"trial", k}, {"rejected", r.error}}, cfg.seed);
    code = kExitRejected;
  }
  return code;
}

struct ChainArgs {
  std::optional<int> n;
  std::optional<int> h;
};

int run_chain(const Config& cfg, const ChainArgs& a) {
  Form f;
  Dec da, db;
  if (a.n || a.h) {
    if (!a.n || !a.h) throw UsageError{"chain generation needs both --n and --h"};
    waring_form* rf = nullptr;
    check(waring_form_random(*a.n, 2, cfg.seed, &rf));
    f.reset(rf);
    for (uint64_t tag : {1u, 2u}) {
      waring_sample* raw = nullptr;
      check(waring_sample_seeded(f.get(), "quadric", *a.h, waring_derive_seed(cfg.seed, tag), &cfg.tol, &raw));
      Sample s(raw);
      waring_decomposition* d = nullptr;
      check(waring_sample_decomposition(s.get(), &d));
      (tag == 1 ? da : db).reset(d);
    }
  } else {
    const json in = read_json(cfg.input);
    f = form_of(field(in, "form"));
    da = decomposition_of(field(in, "a"), cfg);
    db = decomposition_of(field(in, "b"), cfg);
  }
  json cert = call_json([&](char** o) { return waring_chain_connect(f.get(), da.get(), db.get(), cfg.seed, &cfg.tol, o); });
  int ok = 0;
  json check_json = call_json([&](char** o) { return waring_chain_verify(f.get(), cert.dump().c_str(), &cfg.tol, &ok, o); });
  json result = {{"form", form_json(f.get())}, {"certificate", cert}, {"verification", check_json}};
  Output(cfg).emit(result, cfg.seed);
  return ok ? kExitOk : kExitRejected;
}

int run_table(const Config& cfg) {
  // (d, n, h) rows of the classical list of forms with finitely many or few
  // sums-of-powers presentations.
  std::vector<std::array<int, 3>> rows;
  for (int h = 2; h <= 5; ++h) rows.push_back({2 * h - 1, 1, h});
  for (const auto& r : std::vector<std::array<int, 3>>{{3, 2, 4}, {4, 2, 6}, {6, 2, 10}, {5, 2, 7}, {3, 3, 5}, {3, 4, 8}})
    rows.push_back(r);
  json table = json::array();
  for (size_t k = 0; k < rows.size(); ++k) {
    const int d = rows[k][0], n = rows[k][1], h = rows[k][2];
    waring_decomposition* rd = nullptr;
    check(waring_decomposition_random(n, d, h, waring_derive_seed(cfg.seed, k), &rd));
    Dec dec(rd);
    waring_form* rf = nullptr;
    check(waring_form_synthesize(dec.get(), n, &rf));
    Form f(rf);
    int dim = 0;
    check(waring_tangent_dimension(f.get(), dec.get(), &cfg.tol, &dim));
    table.push_back({{"d", d}, {"n", n}, {"h", h}, {"vsp_dim_formula", waring_vsp_dim_formula(n, d, h)}, {"tangent_dim", dim}});
  }
  Output(cfg).emit({{"table", "classical"}, {"rows", table}}, cfg.seed);
  return kExitOk;
}

uint64_t default_seed() {
  const char* env = std::getenv("WARING_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw UsageError{std::string("WARING_SEED is not an unsigned integer: ") + env};
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  try {
    cfg.seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitFailure;
  }

  CLI::App app{"Waring decompositions, apolarity and secant dimensions"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(waring_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Random seed (default: $WARING_SEED or 0)");
  app.add_flag("--pretty", cfg.pretty, "Indented JSON output");
  app.add_option("-i,--input", cfg.input, "Input JSON file ('-' for stdin)");
  app.add_option("-o,--output", cfg.output, "Output file ('-' for stdout)");
  app.add_option("--tol-rank", cfg.tol.rank, "Relative singular value threshold");
  app.add_option("--tol-residual", cfg.tol.residual, "Accepted relative residual");
  app.add_option("--tol-inclusion", cfg.tol.inclusion, "Polyhedron inclusion threshold");
  app.add_option("--tol-distinct", cfg.tol.distinct, "Minimal separation of roots and points");
  app.add_option("--tol-pivot", cfg.tol.pivot, "Relative threshold for the normalization pivot");
  app.add_option("--tol-weight", cfg.tol.weight, "Relative threshold for vanishing weights");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Random form, optionally of a given rank");
  gen_cmd->add_option("--n", gen.n, "Projective dimension (n+1 variables)")->required();
  gen_cmd->add_option("--d", gen.d, "Degree")->required();
  gen_cmd->add_option("--rank", gen.rank, "Synthesize from a random decomposition with this many terms");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose the input form");
  dec_cmd->add_option("--method", dec.method, "sylvester, pencil, quadric, conic or dk")
      ->required()
      ->check(CLI::IsMember({"sylvester", "pencil", "quadric", "conic", "dk"}));
  dec_cmd->add_option("--h", dec.h, "Number of terms");
  dec_cmd->add_option("--u", dec.u, "Parameter point, comma separated (sylvester, dk)");
  dec_cmd->add_option("--pencil", dec.pencil, "JSON file with the second quadric of the pencil");
  dec_cmd->add_option("--plane", dec.plane, "JSON file with the two functionals of a conic plane");

  auto* verify_cmd = app.add_subcommand("verify", "Check a {form, decomposition} pair with the apolarity test");

  int apolar_t = 1;
  auto* apolar_cmd = app.add_subcommand("apolar", "Basis of the apolar forms of degree t");
  apolar_cmd->add_option("--t", apolar_t, "Degree")->required();
  int cat_t = 1;
  auto* cat_cmd = app.add_subcommand("catalecticant", "Catalecticant matrix in degree t");
  cat_cmd->add_option("--t", cat_t, "Degree")->required();

  auto* vsp_cmd = app.add_subcommand("vsp-dim", "Local dimension of the sums-of-powers variety at a decomposition");

  int sn = 0, sd = 0, sh = 0;
  auto* sec_cmd = app.add_subcommand("secant-dim", "Secant dimension of a Veronese variety via Terracini");
  sec_cmd->add_option("--n", sn)->required();
  sec_cmd->add_option("--d", sd)->required();
  sec_cmd->add_option("--h", sh)->required();

  std::string grid;
  int table_jobs = 1;
  auto* sect_cmd = app.add_subcommand("secant-table", "Secant reports over a grid, one line each");
  sect_cmd->add_option("--grid", grid, "n0:n1,d0:d1,h0:h1")->required();
  sect_cmd->add_option("--jobs", table_jobs, "Worker threads");

  std::string sample_method;
  std::optional<int> sample_h;
  int trials = 1, sample_jobs = 1;
  auto* sample_cmd = app.add_subcommand("sample", "Seeded samples of the input form, one line per trial");
  sample_cmd->add_option("--method", sample_method, "sylvester, pencil, quadric, conic or dk")
      ->required()
      ->check(CLI::IsMember({"sylvester", "pencil", "quadric", "conic", "dk"}));
  sample_cmd->add_option("--h", sample_h, "Number of terms");
  sample_cmd->add_option("--trials", trials, "Number of trials");
  sample_cmd->add_option("--jobs", sample_jobs, "Worker threads");

  ChainArgs chain;
  auto* chain_cmd = app.add_subcommand("chain", "Chain between two decompositions of a quadric");
  chain_cmd->add_option("--n", chain.n, "Generate a random quadric with n+1 variables");
  chain_cmd->add_option("--h", chain.h, "Number of terms of the generated decompositions");

  bool classical = false;
  auto* table_cmd = app.add_subcommand("table", "Dimension table");
  table_cmd->add_flag("--classical", classical, "The classical cases")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*gen_cmd) return run_gen(cfg, gen);
    if (*dec_cmd) return run_decompose(cfg, dec);
    if (*verify_cmd) return run_verify(cfg);
    if (*apolar_cmd) return run_apolar(cfg, apolar_t, false);
    if (*cat_cmd) return run_apolar(cfg, cat_t, true);
    if (*vsp_cmd) return run_vsp_dim(cfg);
    if (*sec_cmd) return run_secant_dim(cfg, sn, sd, sh);
    if (*sect_cmd) return run_secant_table(cfg, grid, table_jobs);
    if (*sample_cmd) return run_sample(cfg, sample_method, sample_h, trials, sample_jobs);
    if (*chain_cmd) return run_chain(cfg, chain);
    if (*table_cmd) return run_table(cfg);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.status == WARING_ERR_REJECTED ? kExitRejected : kExitFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
