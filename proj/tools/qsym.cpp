// qsym command line: compute objects, run verification suites, print tables.
//
// Exit codes: 0 success, 1 identity failure, 2 usage or parameter error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qsym/error.hpp"
#include "qsym/hermite.hpp"
#include "qsym/json_io.hpp"
#include "qsym/oracle.hpp"
#include "qsym/partition.hpp"
#include "qsym/render.hpp"
#include "qsym/suites.hpp"
#include "qsym/symfun.hpp"

using namespace qsym;

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  std::string object, suite, family;
  int n = 1, r = 1;
  std::optional<int> max_n;
  std::string partition;
  int t_order = 8, q_order = 10, base_m = 1;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  int from = 0, to = 5;
  int perturb_p = 0;
  std::string cache_dir;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "latex") return Format::Latex;
    return Format::Text;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& s) {
  if (o.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open output file " + o.out);
  f << s;
}

void check_config(const Options& o) {
  if (o.t_order < 1) throw UsageError("--t-order must be >= 1");
  if (o.q_order < 1) throw UsageError("--q-order must be >= 1");
  if (o.base_m == 0) throw UsageError("--base-m must be nonzero");
}

std::string json_line(const json& j) { return j.dump(2) + "\n"; }

std::string expansion(const Options& o, bool h) {
  BaseExponent m(o.base_m);
  json terms = json::array();
  std::ostringstream text, latex;
  latex << (h ? "h_{" : "e_{") << o.n << "} = ";
  bool first = true;
  for (const Partition& p : partitions_of(o.n)) {
    QScalar c = h ? q_z_h(p, m).inverse() : QScalar(static_cast<long>(epsilon(p))) / q_z(p, m);
    terms.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
    text << "[p_" << to_text(p) << "]: " << to_text(c) << "\n";
    if (!first) latex << " + ";
    first = false;
    latex << "\\left(" << to_latex(c) << "\\right)[p_{" << to_latex(p) << "}]";
  }
  switch (o.fmt()) {
    case Format::Json:
      return json_line({{"object", h ? "h-expansion" : "e-expansion"}, {"n", o.n}, {"base_m", o.base_m}, {"terms", terms}});
    case Format::Latex:
      return "$" + latex.str() + "$\n";
    default:
      return text.str();
  }
}

template <class T>
std::string render(const Options& o, const std::string& object, const T& v, const std::string& latex) {
  switch (o.fmt()) {
    case Format::Json:
      return json_line({{"object", object}, {"n", o.n}, {"value", to_json(v)}});
    case Format::Latex:
      return "$" + latex + "$\n";
    default:
      return to_text(v) + "\n";
  }
}

std::string compute(const Options& o) {
  check_config(o);
  BaseExponent m(o.base_m);
  OracleCache cache(o.cache_dir);
  const std::string& ob = o.object;
  if (ob != "zq" && ob != "pseries" && o.n < 0) throw UsageError("--n must be nonnegative");
  if (ob == "p" || ob == "pr") {
    if (o.n < 1) throw UsageError("--n must be >= 1");
    SymPoly v = ob == "p" ? q_power(o.n, m) : q_power_r(o.n, o.r, m);
    return render(o, ob, v, to_latex(v));
  }
  if (ob == "zq") {
    Partition p = parse_partition(o.partition);
    QScalar v = q_z(p, m);
    if (o.fmt() == Format::Json)
      return json_line({{"object", "zq"}, {"partition", to_json(p)}, {"value", to_json(v)}, {"h_value", to_json(q_z_h(p, m))}});
    return render(o, ob, v, to_latex(v));
  }
  if (ob == "e-expansion") return expansion(o, false);
  if (ob == "h-expansion") return expansion(o, true);
  if (ob == "hermite1") {
    RealXPoly v = hermite_I(o.n);
    return render(o, ob, v, to_latex(v));
  }
  if (ob == "hermite2") {
    RealXPoly v = hermite_II(o.n);
    return render(o, ob, v, to_latex(v));
  }
  if (ob == "jtree") {
    QScalar v = J_poly(o.n, cache);
    return render(o, ob, v, to_latex(v));
  }
  if (ob == "pseries") {
    auto s = P_series(o.t_order, m);
    if (o.fmt() == Format::Json) return json_line({{"object", "pseries"}, {"value", to_json(s)}});
    if (o.fmt() == Format::Latex) {
      std::string l;
      for (int n = 1; n <= s.t_order(); ++n)
        l += (n > 1 ? " + " : "") + std::string("\\left(") + to_latex(s[n]) + "\\right)t^{" + std::to_string(n) + "}";
      return "$" + l + "$\n";
    }
    return to_text(s) + "\n";
  }
  throw UsageError("unknown object '" + ob + "'");
}

int verify(const Options& o) {
  check_config(o);
  if (!is_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteConfig c;
  c.max_n = o.max_n;
  c.t_order = o.t_order;
  c.q_order = o.q_order;
  c.base = BaseExponent(o.base_m);
  c.seed = o.seed;
  c.perturb_p = o.perturb_p;
  c.cache = OracleCache(o.cache_dir);
  auto results = run_suite(o.suite, c);
  bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (o.fmt() == Format::Json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name}, {"params", r.params}, {"passed", r.passed}, {"detail", r.detail}});
    emit(o, json_line({{"suite", o.suite}, {"seed", o.seed}, {"t_order", o.t_order}, {"q_order", o.q_order},
                       {"base_m", o.base_m}, {"passed", ok}, {"results", arr}}));
  } else {
    std::ostringstream os;
    os << "suite " << o.suite << " seed " << o.seed << " t-order " << o.t_order << " q-order " << o.q_order
       << " base-m " << o.base_m << "\n";
    print_report(os, results);
    emit(o, os.str());
  }
  return ok ? 0 : 1;
}

std::string table(const Options& o) {
  if (o.from < 0 || o.to < o.from) throw UsageError("need 0 <= --from <= --to");
  const std::string& fam = o.family;
  int from = o.from;
  if ((fam == "jtree" || fam == "p") && from == 0) from = 1;
  OracleCache cache(o.cache_dir);
  BaseExponent m(o.base_m);
  struct Row {
    int n;
    std::string text, latex;
    json j;
  };
  std::vector<Row> rows;
  for (int n = from; n <= o.to; ++n) {
    if (fam == "hermite1" || fam == "hermite2") {
      RealXPoly v = fam == "hermite1" ? hermite_I(n) : hermite_II(n);
      rows.push_back({n, to_text(v), to_latex(v), to_json(v)});
    } else if (fam == "jtree") {
      QScalar v = J_poly(n, cache);
      rows.push_back({n, to_text(v), to_latex(v), to_json(v)});
    } else if (fam == "p") {
      SymPoly v = q_power(n, m);
      rows.push_back({n, to_text(v), to_latex(v), to_json(v)});
    } else {
      throw UsageError("unknown table family '" + fam + "'");
    }
  }
  std::ostringstream os;
  switch (o.fmt()) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"poly", r.j}});
      return json_line(arr);
    }
    case Format::Latex:
      os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n"
         << "\\begin{tabular}{r|l}\n$n$ & value \\\\\n\\hline\n";
      for (const auto& r : rows) os << r.n << " & $" << r.latex << "$ \\\\\n";
      os << "\\end{tabular}\n\\end{document}\n";
      return os.str();
    default:
      os << "n\tvalue\n";
      for (const auto& r : rows) os << r.n << "\t" << r.text << "\n";
      return os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-symmetric function identities"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--t-order", o.t_order, "series truncation N (terms up to t^N)");
    c->add_option("--q-order", o.q_order, "q-truncation M (coefficients mod q^M)");
    c->add_option("--base-m", o.base_m, "base change q -> q^m");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    c->add_option("--out", o.out, "write output to FILE");
    c->add_option("--cache-dir", o.cache_dir, "directory for cached tree polynomials");
  };

  auto* comp = app.add_subcommand("compute", "compute one object");
  comp->add_option("object", o.object, "p | pr | zq | e-expansion | h-expansion | hermite1 | hermite2 | jtree | pseries")
      ->required();
  comp->add_option("--n", o.n, "index n");
  comp->add_option("--r", o.r, "order r for pr");
  comp->add_option("--partition", o.partition, "partition for zq, e.g. 3,1,1");
  common(comp);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", o.suite,
                  "girard | determinants | partition-expansions | exp-formulas | link | products | qbinomial | "
                  "trees | hermite | all")
      ->required();
  ver->add_option("--max-n", o.max_n, "largest n (suite default when omitted)");
  ver->add_option("--seed", o.seed, "seed for the random series");
  ver->add_option("--perturb-p", o.perturb_p, "test hook: corrupt [p_k] in the girard suite");
  common(ver);

  auto* tab = app.add_subcommand("table", "print a table for n in [from, to]");
  tab->add_option("family", o.family, "hermite1 | hermite2 | jtree | p")->required();
  tab->add_option("--from", o.from, "first n");
  tab->add_option("--to", o.to, "last n");
  common(tab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*comp) {
      emit(o, compute(o));
      return 0;
    }
    if (*ver) return verify(o);
    if (*tab) {
      check_config(o);
      emit(o, table(o));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
