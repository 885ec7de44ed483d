#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "prelie/prelie.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  int max_n = -1;
  int degree = -1;
  std::string profile = "quick";
  bool unsafe = false;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

int cmd_trees(const Globals& g, int n, const std::string& action) {
  if (action == "count") {
    require(n >= 1 && n <= 9, "trees count needs 1 <= n <= 9");
    long count = 0;
    prelie::for_each_tree(prelie::first_labels(n), [&](const prelie::RootedTree&) { ++count; });
    if (g.json)
      std::cout << json{{"n", n}, {"count", count}}.dump() << '\n';
    else
      std::cout << count << '\n';
    return kExitOk;
  }
  require(n >= 1 && n <= 6, "trees list needs 1 <= n <= 6");
  const auto trees = prelie::enumerate_trees(prelie::first_labels(n));
  if (g.json) {
    json arr = json::array();
    for (const auto& t : trees) arr.push_back(t.to_string());
    std::cout << json{{"n", n}, {"trees", arr}}.dump() << '\n';
  } else {
    for (const auto& t : trees) std::cout << t.to_string() << '\n';
  }
  return kExitOk;
}

template <class C>
void print_char(const Globals& g, const prelie::SymFunction<C>& full, int d, const std::string& basis) {
  if (basis == "p") {
    const auto part = full.homogeneous(d);
    std::cout << (g.json ? part.to_json().dump() : part.to_string()) << '\n';
    return;
  }
  const auto mult = prelie::schur_decompose(full, d);
  if (g.json) {
    json ms = json::array();
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
      ms.push_back({{"partition", it->first.parts()}, {"multiplicity", prelie::coeff_string(it->second)}});
    std::cout << json{{"degree", d}, {"basis", "schur"}, {"multiplicities", ms}}.dump() << '\n';
    return;
  }
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    if (!prelie::is_zero(it->second))
      std::cout << "s" << it->first.to_string() << ": " << prelie::coeff_string(it->second) << '\n';
}

int cmd_char(const Globals& g, const std::string& which, const std::string& basis) {
  const int d = g.degree;
  require(d >= 1, "char needs --degree >= 1");
  require(d <= 8, "char is capped at degree 8");
  if (which == "zlambdaw") {
    print_char(g, prelie::zLambdaW(d), d, basis);
    return kExitOk;
  }
  prelie::SymF f;
  if (which == "zw")
    f = prelie::zW(d);
  else if (which == "zx")
    f = prelie::zX_formula(d);
  else if (which == "zwhat")
    f = prelie::zWhat(d);
  else
    throw UsageError("unknown generator: " + which);
  print_char(g, f, d, basis);
  return kExitOk;
}

int cmd_homology(const Globals& g, int n, int row, bool table) {
  const int cap = g.unsafe ? 7 : 6;
  require(n >= 1, "homology needs n >= 1");
  if (row >= 0 && !table) {
    require(row <= n, "row index exceeds n");
    require(n <= cap || (n == 7 && row == 0),
            "homology is capped at n = " + std::to_string(cap) + " (n = 7 only for --row 0)");
    prelie::Bicomplex b(n, row);
    const auto h = prelie::row_homology(b, row, prelie::RankMode::exact);
    const int c = h.concentration();
    if (g.json) {
      std::cout << json{{"n", n},
                        {"p", row},
                        {"dims_by_q", h.dims_by_q},
                        {"concentration", c >= 0 ? json(c) : json(nullptr)}}
                       .dump()
                << '\n';
    } else {
      std::cout << "dims_by_q: [";
      for (std::size_t q = 0; q < h.dims_by_q.size(); ++q) std::cout << (q ? "," : "") << h.dims_by_q[q];
      std::cout << "]\nconcentration: " << (c >= 0 ? "q=" + std::to_string(c) : "none") << '\n';
    }
    return kExitOk;
  }
  require(n <= cap, "homology table is capped at n = " + std::to_string(cap));
  prelie::Bicomplex b(n);
  prelie::HomologyTable t{n, {}};
  for (int p = 0; p <= n; ++p) t.rows.push_back(prelie::row_homology(b, p, prelie::RankMode::exact));
  std::cout << t.to_json().dump() << '\n';
  return kExitOk;
}

int cmd_series(const Globals& g, const std::string& which) {
  const int d = g.degree < 0 ? 8 : g.degree;
  require(d >= 0 && d <= 15, "series is capped at degree 15");
  const prelie::Series2 w = prelie::fW(d);
  prelie::Series2 s;
  if (which == "fw") {
    s = w;
  } else if (which == "fx") {
    s = prelie::fX(d);
  } else if (which == "bicomplex") {
    s = prelie::exp_series((prelie::Poly::s() - prelie::Poly::t()) * w);
  } else if (which == "euler") {
    s = prelie::exp_series((prelie::Poly::s() - prelie::Poly(1)) * w);
  } else {
    throw UsageError("unknown series: " + which);
  }
  std::cout << (g.json ? s.to_json().dump() + "\n" : s.to_string());
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& out, bool tamper, bool timing) {
  prelie::VerifyOptions opts;
  try {
    opts = prelie::VerifyOptions::for_profile(g.profile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g.max_n >= 0) opts.max_n = g.max_n;
  if (g.degree >= 0) opts.max_degree = g.degree;
  opts.unsafe = g.unsafe;
  opts.tamper = tamper;
  try {
    opts.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const prelie::VerifyReport report = prelie::run_verify(opts);
  const json j = report.to_json(timing);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write report to " + out);
    f << j.dump(2) << '\n';
  }
  std::cout << (g.json ? j.dump(2) + "\n" : report.to_text(timing));
  if (const auto* bad = report.first_failure(); bad && !g.json) std::cerr << "first failure: " << bad->name << '\n';
  return report.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-Lie operad: trees, characters, homology and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print machine-readable JSON");
  app.add_option("--max-n", g.max_n, "Largest label count for verify");
  app.add_option("--degree", g.degree, "Degree (char, series) or largest degree (verify)");
  app.add_option("--profile", g.profile, "Verification profile")->check(CLI::IsMember({"quick", "full"}));
  app.add_flag("--unsafe-max", g.unsafe, "Lift the default size caps");

  int n = 0;
  std::string action = "count";
  auto* trees = app.add_subcommand("trees", "Count or list labelled rooted trees");
  trees->add_option("--n", n, "Number of labels")->required();
  trees->add_option("action", action, "count or list")->check(CLI::IsMember({"count", "list"}));

  std::string which, basis = "p";
  auto* chr = app.add_subcommand("char", "Cycle index of zw, zx, zwhat or zlambdaw in one degree");
  chr->add_option("which", which, "Generator")->required();
  chr->add_option("--basis", basis, "p or schur")->check(CLI::IsMember({"p", "schur"}));

  int row = -1;
  bool table = false;
  auto* hom = app.add_subcommand("homology", "Homology of the pre-Lie/Koszul bicomplex");
  hom->add_option("--n", n, "Number of labels")->required();
  hom->add_option("--row", row, "Single row p");
  hom->add_flag("--table", table, "Full table as JSON (default)");

  std::string series_name = "fw";
  auto* ser = app.add_subcommand("series", "Exponential generating series fw, fx, bicomplex or euler");
  ser->add_option("which", series_name, "Series name")->check(CLI::IsMember({"fw", "fx", "bicomplex", "euler"}));

  std::string out;
  bool tamper = false, timing = false;
  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--out", out, "Write the JSON report to this path");
  ver->add_flag("--timing", timing, "Include elapsed milliseconds per check");
  ver->add_flag("--tamper-fixture", tamper, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*trees) return cmd_trees(g, n, action);
    if (*chr) return cmd_char(g, which, basis);
    if (*hom) return cmd_homology(g, n, row, table);
    if (*ser) return cmd_series(g, series_name);
    if (*ver) return cmd_verify(g, out, tamper, timing);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
