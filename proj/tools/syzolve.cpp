// syzolve: generate, solve, inspect and benchmark Toeplitz / TBT instances.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse or dimension error,
// 3 singular matrix, 4 degenerate Euclidean sequence or unavailable route.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "syzolve/syzolve.hpp"

namespace {

using namespace syzolve;

constexpr double kFloatResidualTol = 1e-8;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kSingular = 3, kDegenerate = 4 };

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

template <Field F>
json poly_json(const UniPoly<F>& p) {
  return elems_to_json<F>(p.coeffs());
}

template <Field F>
json bipoly_json(const BiPoly<F>& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < p.cols(); ++j) r.push_back(field_traits<F>::format(p.coeff(i, j)));
    rows.push_back(r);
  }
  return rows;
}

template <Field F>
std::vector<F> load_rhs(const std::string& path, std::size_t len, std::optional<std::uint64_t> seed) {
  std::vector<F> g;
  if (!path.empty()) {
    const json j = read_json_file(path);
    g = elems_from_json<F>(j.is_object() ? j.at("g") : j, "rhs");
  } else {
    g = random_vector<F>(len, seed.value_or(0));
  }
  if (g.size() != len)
    throw DimensionError("right-hand side has length " + std::to_string(g.size()) + ", expected " + std::to_string(len));
  return g;
}

template <Field F>
bool residual_ok(double scaled) {
  return is_exact_v<F> ? scaled == 0.0 : scaled <= kFloatResidualTol;
}

// ---- gen ----

struct GenArgs {
  std::string kind = "toeplitz", field = "rational", out;
  std::size_t n = 4, m = 0;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
  const FieldKind fk = parse_field_kind(a.field);
  json j;
  if (a.kind == "toeplitz") {
    j = fk == FieldKind::rational ? to_json(random_toeplitz<Rational>(a.n, a.seed)) : to_json(random_toeplitz<double>(a.n, a.seed));
  } else if (a.kind == "tbt") {
    const std::size_t m = a.m == 0 ? a.n : a.m;
    j = fk == FieldKind::rational ? to_json(random_tbt<Rational>(m, a.n, a.seed)) : to_json(random_tbt<double>(m, a.n, a.seed));
  } else {
    throw ParseError("unknown kind '" + a.kind + "' (expected toeplitz or tbt)");
  }
  emit(a.out, j.dump(2) + "\n");
  return kOk;
}

// ---- solve ----

struct SolveArgs {
  std::string instance, rhs, route = "eea", out;
  std::optional<std::uint64_t> rhs_seed;
  bool no_fallback = false, unstable_ok = false;
};

template <Field F>
int solve_toeplitz(const ToeplitzMatrix<F>& tm, const SolveArgs& a) {
  const auto g = load_rhs<F>(a.rhs, tm.size(), a.rhs_seed);
  SolveOptions opts{parse_route(a.route), !a.no_fallback, a.unstable_ok};
  const auto rep = solve(tm, std::span<const F>(g), opts);
  const double scaled = scaled_residual(tm, std::span<const F>(rep.u), std::span<const F>(g));
  json j = {{"kind", "toeplitz"},
            {"field", field_traits<F>::name},
            {"n", tm.size()},
            {"route", to_string(rep.route)},
            {"fell_back", rep.fell_back},
            {"u", elems_to_json<F>(rep.u)},
            {"g", elems_to_json<F>(g)},
            {"residual_norm", rep.residual_norm},
            {"scaled_residual", scaled},
            {"timings", rep.timings}};
  emit(a.out, j.dump(2) + "\n");
  return residual_ok<F>(scaled) ? kOk : kVerifyFailed;
}

template <Field F>
int solve_tbt_cmd(const TbtMatrix<F>& tm, const SolveArgs& a) {
  const auto g = load_rhs<F>(a.rhs, tm.size(), a.rhs_seed);
  detail::Stopwatch clock;
  const auto sol = solve_tbt(tm, std::span<const F>(g));
  const double t_solve = clock.lap();
  const double res = tbt_residual_norm(tm, std::span<const F>(sol.u), std::span<const F>(g));
  const double scaled = tbt_scaled_residual(tm, std::span<const F>(sol.u), std::span<const F>(g));
  json j = {{"kind", "tbt"},
            {"field", field_traits<F>::name},
            {"m", tm.m()},
            {"n", tm.n()},
            {"route", "s9"},
            {"u", elems_to_json<F>(sol.u)},
            {"g", elems_to_json<F>(g)},
            {"residual_norm", res},
            {"scaled_residual", scaled},
            {"timings", {{"solve", t_solve}, {"residual", clock.lap()}}}};
  emit(a.out, j.dump(2) + "\n");
  return residual_ok<F>(scaled) ? kOk : kVerifyFailed;
}

int cmd_solve(const SolveArgs& a) {
  const auto inst = load_instance(a.instance);
  return std::visit(
      [&](const auto& tm) -> int {
        using M = std::decay_t<decltype(tm)>;
        if constexpr (std::is_same_v<M, ToeplitzMatrix<Rational>> || std::is_same_v<M, ToeplitzMatrix<double>>)
          return solve_toeplitz(tm, a);
        else
          return solve_tbt_cmd(tm, a);
      },
      inst);
}

// ---- basis ----

struct BasisArgs {
  std::string instance, route = "eea", out;
  bool no_fallback = false, unstable_ok = false;
};

template <Field F>
json vec3_json(const SyzygyVec3<F>& s) {
  return {{"u", poly_json(s.u)}, {"v", poly_json(s.v)}, {"w", poly_json(s.w)}};
}

template <Field F>
int basis_toeplitz(const ToeplitzMatrix<F>& tm, const BasisArgs& a) {
  SolveOptions opts{parse_route(a.route), !a.no_fallback, a.unstable_ok};
  const auto br = compute_basis(tm, opts);
  const auto sym = symbols(tm);
  const double r1 = verify_syzygy(sym, br.basis.rho1).max_norm();
  const double r2 = verify_syzygy(sym, br.basis.rho2).max_norm();
  const auto [mu1, mu2] = mu_degrees(br.basis);
  json j = {{"kind", "toeplitz"},
            {"field", field_traits<F>::name},
            {"n", tm.size()},
            {"route", to_string(br.route)},
            {"fell_back", br.fell_back},
            {"rho1", vec3_json(br.basis.rho1)},
            {"rho2", vec3_json(br.basis.rho2)},
            {"mu_degrees", {mu1.str(), mu2.str()}},
            {"residuals", {r1, r2}}};
  bool ok = mu1 == tm.size() && mu2 == tm.size();
  if constexpr (is_exact_v<F>) {
    ok = ok && r1 == 0.0 && r2 == 0.0;
    j["interpolation_violation"] = interpolation_check(map_field<double>(tm), map_field<double>(br.basis));
  } else {
    const double scale = std::max(1.0, sym.wrapped.max_norm());
    ok = ok && std::max(r1, r2) <= 1e-8 * scale;
    j["interpolation_violation"] = interpolation_check(tm, br.basis);
  }
  emit(a.out, j.dump(2) + "\n");
  return ok ? kOk : kVerifyFailed;
}

template <Field F>
int basis_tbt(const TbtMatrix<F>& tm, const BasisArgs& a) {
  const auto set = generators_rho(tm);
  const auto gens = generator_vector(tbt_symbols(tm));
  json rhos = json::array();
  json residuals = json::array();
  double worst = 0.0;
  for (const auto& rho : set.rho) {
    json entries = json::array();
    for (const auto& e : rho) entries.push_back(bipoly_json(e));
    rhos.push_back(entries);
    const double r = apply_generators(gens, rho).max_norm();
    residuals.push_back(r);
    worst = std::max(worst, r);
  }
  json j = {{"kind", "tbt"},     {"field", field_traits<F>::name}, {"m", tm.m()}, {"n", tm.n()},
            {"count", set.size()}, {"rho", rhos},                   {"residuals", residuals}};
  emit(a.out, j.dump(2) + "\n");
  const bool ok = is_exact_v<F> ? worst == 0.0 : worst <= 1e-8 * std::max(1.0, tm.norm_inf());
  return ok ? kOk : kVerifyFailed;
}

int cmd_basis(const BasisArgs& a) {
  const auto inst = load_instance(a.instance);
  return std::visit(
      [&](const auto& tm) -> int {
        using M = std::decay_t<decltype(tm)>;
        if constexpr (std::is_same_v<M, ToeplitzMatrix<Rational>> || std::is_same_v<M, ToeplitzMatrix<double>>)
          return basis_toeplitz(tm, a);
        else
          return basis_tbt(tm, a);
      },
      inst);
}


// ---- verify ----

struct VerifyArgs {
  std::string instance, solution, rhs;
};

template <class M>
int verify_any(const M& tm, const json& sol, const VerifyArgs& a) {
  using F = typename M::value_type;
  const auto u = elems_from_json<F>(sol.at("u"), "solution u");
  std::vector<F> g;
  if (!a.rhs.empty()) {
    g = load_rhs<F>(a.rhs, tm.size(), std::nullopt);
  } else if (sol.contains("g")) {
    g = elems_from_json<F>(sol.at("g"), "solution g");
  } else {
    throw ParseError("solution has no 'g'; pass --rhs");
  }
  if (u.size() != tm.size() || g.size() != tm.size())
    throw DimensionError("solution or right-hand side length does not match the instance size " + std::to_string(tm.size()));
  double res = 0.0, scaled = 0.0;
  if constexpr (std::is_same_v<M, ToeplitzMatrix<F>>) {
    res = residual_norm(tm, std::span<const F>(u), std::span<const F>(g));
    scaled = scaled_residual(tm, std::span<const F>(u), std::span<const F>(g));
  } else {
    res = tbt_residual_norm(tm, std::span<const F>(u), std::span<const F>(g));
    scaled = tbt_scaled_residual(tm, std::span<const F>(u), std::span<const F>(g));
  }
  const bool ok = residual_ok<F>(scaled);
  std::printf("residual %.6e scaled %.6e %s\n", res, scaled, ok ? "ok" : "FAILED");
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const VerifyArgs& a) {
  const auto inst = load_instance(a.instance);
  const json sol = read_json_file(a.solution);
  if (!sol.is_object() || !sol.contains("u")) throw ParseError("solution: missing 'u'");
  try {
    return std::visit([&](const auto& tm) { return verify_any(tm, sol, a); }, inst);
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution: ") + e.what());
  }
}

// ---- bench ----

struct BenchArgs {
  std::string kind = "toeplitz", out, routes;
  std::vector<std::size_t> sizes{256, 512, 1024};
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  bool strict = false;
};

struct BenchRecord {
  std::size_t m = 0, n = 0, trial = 0;
  std::string route;
  std::uint64_t seed = 0;
  double basis = 0, reduce = 0, total = 0, residual = 0;
};

BenchRecord bench_one(const std::string& kind, const std::string& route, std::size_t size, std::size_t trial, std::uint64_t base_seed) {
  BenchRecord r;
  r.route = route;
  r.trial = trial;
  r.seed = base_seed + 1000003ULL * size + trial;
  if (kind == "toeplitz") {
    r.n = size;
    const auto tm = random_toeplitz<double>(size, r.seed);
    const auto g = random_vector<double>(size, r.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<double> u;
    if (route == "oracle") {
      detail::Stopwatch c;
      u = dense_solve(tm, std::span<const double>(g));
      r.total = c.lap();
    } else {
      SolveOptions opts{parse_route(route), false, true};
      const auto rep = solve(tm, std::span<const double>(g), opts);
      u = rep.u;
      r.basis = rep.timings.at("basis");
      r.reduce = rep.timings.at("reduce");
      r.total = r.basis + r.reduce;
    }
    r.residual = scaled_residual(tm, std::span<const double>(u), std::span<const double>(g));
  } else if (kind == "tbt") {
    r.m = r.n = size;
    const auto tm = random_tbt<double>(size, size, r.seed);
    const auto g = random_vector<double>(size * size, r.seed ^ 0x9e3779b97f4a7c15ULL);
    detail::Stopwatch c;
    const auto u = route == "oracle" ? dense_solve_tbt(tm, std::span<const double>(g)) : solve_tbt(tm, std::span<const double>(g)).u;
    r.total = c.lap();
    r.residual = tbt_scaled_residual(tm, std::span<const double>(u), std::span<const double>(g));
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  return r;
}

/// Least-squares slope of log(time) against log(size) over the per-size medians.
double loglog_slope(const std::map<std::size_t, std::vector<double>>& times) {
  std::vector<double> xs, ys;
  for (auto [size, v] : times) {
    std::sort(v.begin(), v.end());
    xs.push_back(std::log(static_cast<double>(size)));
    ys.push_back(std::log(std::max(v[v.size() / 2], 1e-9)));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx == 0.0 ? 0.0 : sxy / sxx;
}

std::size_t worker_count() {
  const char* env = std::getenv("SYZOLVE_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<std::size_t>(v) : 1;
}

int cmd_bench(const BenchArgs& a) {
  std::vector<std::string> routes;
  {
    std::string route_list = a.routes.empty() ? (a.kind == "tbt" ? "s9,oracle" : "dense,oracle") : a.routes;
    std::stringstream ss(route_list);
    for (std::string r; std::getline(ss, r, ',');)
      if (!r.empty()) routes.push_back(r);
  }
  struct Job {
    std::string route;
    std::size_t size, trial;
  };
  std::vector<Job> jobs;
  for (auto size : a.sizes)
    for (const auto& route : routes)
      for (std::size_t t = 0; t < a.trials; ++t) jobs.push_back({route, size, t});

  std::vector<BenchRecord> records(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == jobs.size()) return;
        i = next++;
      }
      try {
        records[i] = bench_one(a.kind, jobs[i].route, jobs[i].size, jobs[i].trial, a.seed);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(jobs.size(), 1));
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (!e.empty()) throw Error("bench: " + e);

  std::ostringstream csv;
  csv << "kind,m,n,route,trial,seed,basis_s,reduce_s,total_s,scaled_residual\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%s,%zu,%llu,%.6f,%.6f,%.6f,%.3e\n", a.kind.c_str(), r.m, r.n, r.route.c_str(), r.trial,
                  static_cast<unsigned long long>(r.seed), r.basis, r.reduce, r.total, r.residual);
    csv << buf;
  }
  emit(a.out, csv.str());

  // Trend report on stderr: dense oracle cubic, structured routes well below quadratic.
  bool trend_ok = true;
  if (a.sizes.size() >= 2) {
    for (const auto& route : routes) {
      std::map<std::size_t, std::vector<double>> total, reduce;
      for (const auto& r : records)
        if (r.route == route) {
          total[a.kind == "tbt" ? r.m : r.n].push_back(r.total);
          reduce[a.kind == "tbt" ? r.m : r.n].push_back(r.reduce);
        }
      const double slope = loglog_slope(total);
      std::fprintf(stderr, "slope %-8s total %.3f", route.c_str(), slope);
      if (route == "oracle") {
        const bool ok = slope >= 2.5;
        trend_ok = trend_ok && ok;
        std::fprintf(stderr, "  [%s: expected >= 2.5]\n", ok ? "ok" : "WARN");
      } else if (a.kind == "toeplitz") {
        const double rs = loglog_slope(reduce);
        const bool ok = rs <= 1.35;
        trend_ok = trend_ok && ok;
        std::fprintf(stderr, "  reduce %.3f  [%s: reduce expected <= 1.35]\n", rs, ok ? "ok" : "WARN");
      } else {
        std::fprintf(stderr, "\n");
      }
    }
  }
  return a.strict && !trend_ok ? kVerifyFailed : kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Toeplitz and Toeplitz-block-Toeplitz solver through syzygies of (T~, x^n, x^2n - 1)"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a random invertible instance");
  g->add_option("--kind", gen.kind, "toeplitz or tbt")->check(CLI::IsMember({"toeplitz", "tbt"}));
  g->add_option("--n", gen.n, "size (toeplitz) or block count (tbt)")->check(CLI::PositiveNumber);
  g->add_option("--m", gen.m, "block size (tbt, defaults to n)");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--field", gen.field, "rational or float64")->check(CLI::IsMember({"rational", "float64"}));
  g->add_option("--out", gen.out, "output file (stdout when omitted)");

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "solve T u = g");
  s->add_option("instance", sol.instance, "instance JSON")->required();
  auto* rhs_opt = s->add_option("--rhs", sol.rhs, "right-hand side JSON ({\"g\": [...]})");
  s->add_option("--rhs-seed", sol.rhs_seed, "draw a random right-hand side")->excludes(rhs_opt);
  s->add_option("--route", sol.route, "eea or dense")->check(CLI::IsMember({"eea", "dense", "dense-generators"}));
  s->add_flag("--no-fallback", sol.no_fallback, "fail instead of falling back to the dense route");
  s->add_flag("--unstable-ok", sol.unstable_ok, "allow the Euclidean route over float64");
  s->add_option("--out", sol.out, "report file (stdout when omitted)");

  BasisArgs bas;
  auto* b = app.add_subcommand("basis", "print the syzygy basis with verification residuals");
  b->add_option("instance", bas.instance, "instance JSON")->required();
  b->add_option("--route", bas.route, "eea or dense")->check(CLI::IsMember({"eea", "dense", "dense-generators"}));
  b->add_flag("--no-fallback", bas.no_fallback, "fail instead of falling back to the dense route");
  b->add_flag("--unstable-ok", bas.unstable_ok, "allow the Euclidean route over float64");
  b->add_option("--out", bas.out, "output file (stdout when omitted)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "recompute the residual of a stored solution");
  v->add_option("instance", ver.instance, "instance JSON")->required();
  v->add_option("solution", ver.solution, "solution JSON with 'u' (and 'g')")->required();
  v->add_option("--rhs", ver.rhs, "right-hand side JSON when the solution has no 'g'");

  BenchArgs ben;
  auto* be = app.add_subcommand("bench", "time routes over a range of sizes (float64), CSV output");
  be->add_option("--kind", ben.kind, "toeplitz or tbt")->check(CLI::IsMember({"toeplitz", "tbt"}));
  be->add_option("--sizes", ben.sizes, "sizes (n, or m = n for tbt)")->delimiter(',');
  be->add_option("--routes", ben.routes, "comma list: dense, eea, oracle (toeplitz); s9, oracle (tbt)");
  be->add_option("--trials", ben.trials, "trials per size and route")->check(CLI::PositiveNumber);
  be->add_option("--seed", ben.seed, "base seed");
  be->add_option("--out", ben.out, "CSV file (stdout when omitted)");
  be->add_flag("--strict", ben.strict, "turn trend warnings into a failing exit code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_solve(sol);
    if (*b) return cmd_basis(bas);
    if (*v) return cmd_verify(ver);
    if (*be) return cmd_bench(ben);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const DegenerateSequenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const UnsupportedFieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
