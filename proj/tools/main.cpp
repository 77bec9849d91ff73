// Command line front end: statistics, characteristic functions, Macdonald
// polynomials, the compositional elements, the involution, and the
// verification suites.  All output is deterministic; --json switches the
// value subcommands between pretty text and canonical JSON.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shuffle/charfn.hpp"
#include "shuffle/macdonald.hpp"
#include "shuffle/nalpha.hpp"
#include "shuffle/relations.hpp"
#include "shuffle/serialize.hpp"

using json = nlohmann::json;
using namespace shuffle;

namespace {

int degree_cap() {
  const char* env = std::getenv("SHUFFLE_MAX_DEGREE");
  if (!env) return 6;
  return std::max(0, std::atoi(env));
}

[[noreturn]] void cap_error(const std::string& what, int n) {
  std::cerr << what << " " << n << " exceeds the degree cap " << degree_cap()
            << "; raise SHUFFLE_MAX_DEGREE to allow it\n";
  std::exit(2);
}

void check_cap(const std::string& what, int n) {
  if (n > degree_cap()) cap_error(what, n);
}

json sym_json(const SymFunc& f, Basis b = Basis::s) {
  return json::parse(to_json(f.to_basis(b)));
}

void emit_sym(const SymFunc& f, bool pretty) {
  if (pretty)
    std::cout << f.to_basis(Basis::s).to_string() << "\n";
  else
    std::cout << sym_json(f).dump() << "\n";
}

void emit_velem(const VElem& v, bool pretty) {
  if (pretty)
    std::cout << v.to_string() << "\n";
  else
    std::cout << to_json(v) << "\n";
}

// Runs fn(i) for i in [0, count) on `jobs` threads; order-independent work.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min(jobs, count); ++j)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

int finish_verify(bool pass, const json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump() << "\n";
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int run_verify_shuffle(int n, int jobs, bool as_json) {
  check_cap("n =", n);
  auto alphas = Composition::all_of_size(n);
  struct Rec {
    SymFunc d_op, d_brute, nabla;
    bool equal = false;
  };
  std::vector<Rec> recs(alphas.size());
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int i) {
    Rec r;
    r.d_op = dalpha_ops(alphas[i]);
    r.d_brute = dalpha(alphas[i]);
    r.nabla = nabla_c(alphas[i]);
    r.equal = r.d_op == r.d_brute && r.d_brute == r.nabla;
    recs[i] = std::move(r);
  });
  SymFunc total(Basis::m);
  bool pass = true;
  json records = json::array();
  for (size_t i = 0; i < alphas.size(); ++i) {
    pass = pass && recs[i].equal;
    total += recs[i].d_brute;
    records.push_back({{"alpha", alphas[i].parts()},
                       {"d_op", sym_json(recs[i].d_op)},
                       {"d_brute", sym_json(recs[i].d_brute)},
                       {"nabla_c", sym_json(recs[i].nabla)},
                       {"equal", recs[i].equal}});
  }
  // Aggregate: the compositional sums refine (-1)^n nabla e_n.
  SymFunc en = SymFunc::single(Basis::e, Partition(n ? std::vector<int>{n}
                                                     : std::vector<int>{}));
  SymFunc rhs = nabla(en);
  if (n % 2) rhs = -rhs;
  bool aggregate = total == rhs;
  pass = pass && aggregate;
  json report = {{"n", n},
                 {"compositions", records},
                 {"aggregate_nabla_en", aggregate},
                 {"status", pass ? "pass" : "fail"}};
  return finish_verify(pass, report, as_json);
}

int run_verify_relations(int kmax, int degree, int trials, unsigned long seed,
                         bool as_json) {
  check_cap("degree =", degree);
  RelationReport rep = check_relations(kmax, degree, trials, seed);
  json out = json::array();
  for (const auto& r : rep.results) {
    out.push_back({{"relation", r.relation},
                   {"level", r.level},
                   {"degree", r.degree},
                   {"status", r.pass ? "pass" : "fail"}});
    if (!as_json && !r.pass)
      std::cout << "fail: " << r.relation << " at level " << r.level << "\n";
  }
  return finish_verify(rep.all_pass(), out, as_json);
}

int run_verify_bijection(int n, int jobs, bool as_json) {
  check_cap("n =", n);
  std::atomic<bool> pass{true};
  json sizes = json::array();
  for (int m = 0; m <= n; ++m) {
    auto paths = DyckPath::all_full(m);
    std::vector<DyckPath> images(paths.size());
    parallel_for(static_cast<int>(paths.size()), jobs, [&](int i) {
      const DyckPath& pi = paths[i];
      DyckPath z = pi.zeta();
      images[i] = z;
      if (pi.area() != z.bounce() || pi.dinv() != z.area() ||
          pi.touch() != z.touch_prime())
        pass = false;
    });
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      pass = false;
    sizes.push_back({{"n", m}, {"paths", paths.size()}});
  }
  json report = {{"max_n", n},
                 {"classes", sizes},
                 {"status", pass ? "pass" : "fail"}};
  return finish_verify(pass, report, as_json);
}

int run_verify_charfn(int n, int jobs, bool as_json) {
  check_cap("n =", n);
  std::atomic<bool> pass{true};
  for (int m = 1; m <= n; ++m) {
    auto paths = DyckPath::all_full(m);
    parallel_for(static_cast<int>(paths.size()), jobs, [&](int i) {
      const DyckPath& pi = paths[i];
      SymFunc c = chi(pi);
      if (chi_ops(pi) != c) pass = false;
      if (chi_zero_ops(pi) != chi_zero(pi)) pass = false;
      if (c != chi(pi.reversed())) pass = false;
      QtScalar s = QtScalar::q_pow(-pi.area());
      if (m % 2) s = -s;
      if (c.bar_coeffs().plethysm_minus() != c.scaled(s)) pass = false;
    });
  }
  json report = {{"max_n", n}, {"status", pass ? "pass" : "fail"}};
  return finish_verify(pass, report, as_json);
}

std::string read_input(const std::string& arg) {
  if (!arg.empty()) return arg;
  std::string text((std::istreambuf_iterator<char>(std::cin)),
                   std::istreambuf_iterator<char>());
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for Dyck path characteristic functions,\n"
               "Macdonald polynomials and the compositional shuffle identity"};
  app.require_subcommand(1);

  std::string path_arg, weight_arg = "one", alpha_arg, mu_arg, method_arg =
                                                                   "op";
  std::string input_arg;
  bool pretty = false;
  int n_arg = 3, jobs = 1, kmax = 3, degree = 4, trials = 10;
  unsigned long seed = 0;

  auto* chi_cmd = app.add_subcommand(
      "chi", "Characteristic function of a path (Schur basis)");
  chi_cmd->add_option("--path", path_arg, "step string over N/E or -/+");
  chi_cmd->add_option("--weight", weight_arg,
                      "one | zero | mu=<partition> (Macdonald corner weights)");
  chi_cmd->add_flag("--pretty", pretty, "human readable instead of JSON");

  auto* zeta_cmd =
      app.add_subcommand("zeta", "Sweep map: image path, sigma, bounce data");
  zeta_cmd->add_option("--path", path_arg)->required();

  auto* stats_cmd = app.add_subcommand("stats", "All statistics of a path");
  stats_cmd->add_option("--path", path_arg)->required();

  auto* mac_cmd = app.add_subcommand(
      "macdonald", "Modified Macdonald polynomial H_mu (Schur basis)");
  mac_cmd->add_option("--mu", mu_arg, "partition, e.g. 2,1")->required();
  mac_cmd->add_flag("--pretty", pretty);

  auto* nabla_cmd = app.add_subcommand(
      "nabla", "Apply nabla to a symmetric function (JSON in, JSON out)");
  nabla_cmd->add_option("--input", input_arg,
                        "symmetric function JSON; stdin when omitted");
  nabla_cmd->add_flag("--pretty", pretty);

  auto* nalpha_cmd = app.add_subcommand(
      "nalpha", "Compositional element N_alpha in V_{l(alpha)}");
  nalpha_cmd->add_option("--alpha", alpha_arg, "composition, e.g. 3,1")
      ->required();
  nalpha_cmd->add_flag("--pretty", pretty);

  auto* dalpha_cmd =
      app.add_subcommand("dalpha", "Compositional sum D_alpha (Schur basis)");
  dalpha_cmd->add_option("--alpha", alpha_arg)->required();
  dalpha_cmd->add_option("--method", method_arg, "op | brute | nabla");
  dalpha_cmd->add_flag("--pretty", pretty);

  auto* ninv_cmd = app.add_subcommand(
      "ninv", "Antilinear involution of a module element (JSON in/out)");
  ninv_cmd->add_option("--input", input_arg,
                       "module element JSON; stdin when omitted");
  ninv_cmd->add_flag("--pretty", pretty);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  bool as_json = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed (default 0)");
    cmd->add_option("--jobs", jobs, "worker threads (default 1)");
    cmd->add_flag("--json", as_json, "emit the full report as JSON");
  };
  auto* vshuffle = verify->add_subcommand(
      "shuffle", "three-way D_alpha equality for all compositions of n");
  vshuffle->add_option("--n", n_arg)->required();
  add_common(vshuffle);
  auto* vrel =
      verify->add_subcommand("relations", "defining relations of the algebra");
  vrel->add_option("--kmax", kmax, "maximum level (default 3)");
  vrel->add_option("--degree", degree, "maximum random degree (default 4)");
  vrel->add_option("--trials", trials, "random elements per level");
  add_common(vrel);
  auto* vbij = verify->add_subcommand(
      "bijection", "sweep map statistics correspondences up to n");
  vbij->add_option("--n", n_arg)->required();
  add_common(vbij);
  auto* vchar = verify->add_subcommand(
      "charfn", "operator words and symmetries of chi up to n");
  vchar->add_option("--n", n_arg)->required();
  add_common(vchar);

  CLI11_PARSE(app, argc, argv);

  try {
    if (chi_cmd->parsed()) {
      if (weight_arg.rfind("mu=", 0) == 0) {
        Partition mu = parse_partition(weight_arg.substr(3));
        check_cap("|mu| =", mu.size());
        DyckPath pi = path_arg.empty() ? macdonald_path(mu)
                                       : DyckPath::from_steps(path_arg);
        emit_sym(chi_weighted(pi, macdonald_weights(mu)), pretty);
        return 0;
      }
      if (path_arg.empty())
        throw std::invalid_argument("chi needs --path (or --weight mu=...)");
      DyckPath pi = DyckPath::from_steps(path_arg);
      check_cap("|pi| =", pi.rows());
      if (weight_arg == "one")
        emit_sym(chi(pi), pretty);
      else if (weight_arg == "zero")
        emit_sym(chi_zero(pi), pretty);
      else
        throw std::invalid_argument("unknown weight: " + weight_arg);
      return 0;
    }
    if (zeta_cmd->parsed()) {
      DyckPath pi = DyckPath::from_steps(path_arg);
      DyckPath z = pi.zeta();
      json out = {{"path", pi.steps()},
                  {"zeta", z.steps()},
                  {"sigma", pi.zeta_permutation()},
                  {"bounce", z.bounce()},
                  {"area", pi.area()},
                  {"dinv", pi.dinv()},
                  {"touch", pi.touch()},
                  {"touch_prime", z.touch_prime()}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (stats_cmd->parsed()) {
      DyckPath pi = DyckPath::from_steps(path_arg);
      std::vector<int> coarea;
      auto a = pi.area_sequence();
      for (size_t j = 0; j < a.size(); ++j)
        coarea.push_back(static_cast<int>(j) - a[j]);  // x_j - 1
      json corners = json::array(), dinv_pairs = json::array();
      for (auto [i, j] : pi.corners()) corners.push_back({i, j});
      for (auto [i, j] : pi.dinv_pairs()) dinv_pairs.push_back({i, j});
      json out = {{"steps", pi.steps()},
                  {"area_seq", a},
                  {"coarea_seq", coarea},
                  {"area", pi.area()},
                  {"dinv_pairs", dinv_pairs},
                  {"dinv", pi.dinv()},
                  {"touch", pi.touch()},
                  {"bounce", pi.bounce()},
                  {"touch_prime", pi.touch_prime()},
                  {"corners", corners}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (mac_cmd->parsed()) {
      Partition mu = parse_partition(mu_arg);
      check_cap("|mu| =", mu.size());
      emit_sym(macdonald_h(mu), pretty);
      return 0;
    }
    if (nabla_cmd->parsed()) {
      SymFunc f = symfunc_from_json(read_input(input_arg));
      check_cap("degree", f.max_degree());
      emit_sym(nabla(f), pretty);
      return 0;
    }
    if (nalpha_cmd->parsed()) {
      Composition alpha = parse_composition(alpha_arg);
      check_cap("|alpha| =", alpha.size());
      emit_velem(n_alpha(alpha), pretty);
      return 0;
    }
    if (dalpha_cmd->parsed()) {
      Composition alpha = parse_composition(alpha_arg);
      check_cap("|alpha| =", alpha.size());
      SymFunc f;
      if (method_arg == "op")
        f = dalpha_ops(alpha);
      else if (method_arg == "brute")
        f = dalpha(alpha);
      else if (method_arg == "nabla")
        f = nabla_c(alpha);
      else
        throw std::invalid_argument("unknown method: " + method_arg);
      emit_sym(f, pretty);
      return 0;
    }
    if (ninv_cmd->parsed()) {
      VElem v = velem_from_json(read_input(input_arg));
      int deg = 0;
      for (const auto& [e, g] : v.terms()) {
        int y = 0;
        for (int x : e) y += x;
        deg = std::max(deg, y + g.max_degree());
      }
      check_cap("degree", deg);
      emit_velem(n_involution(v), pretty);
      return 0;
    }
    if (vshuffle->parsed()) return run_verify_shuffle(n_arg, jobs, as_json);
    if (vrel->parsed())
      return run_verify_relations(kmax, degree, trials, seed, as_json);
    if (vbij->parsed()) return run_verify_bijection(n_arg, jobs, as_json);
    if (vchar->parsed()) return run_verify_charfn(n_arg, jobs, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
