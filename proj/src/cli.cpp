#include "gwitt/cli.hpp"

#include "gwitt/derivations.hpp"
#include "gwitt/ideals.hpp"
#include "gwitt/selftest.hpp"
#include "gwitt/structure.hpp"
#include "gwitt/syntax.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace gwitt {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  int n = 1;
  std::string slopes;
  std::uint64_t seed = 1;
};

AlgebraConfig make_config(const GlobalFlags& flags) {
  if (flags.n < 1) throw UsageError("--n must be at least 1");
  std::vector<Rational> slopes;
  if (flags.slopes.empty()) {
    slopes.assign(static_cast<std::size_t>(flags.n), Rational(1));
  } else {
    std::stringstream list(flags.slopes);
    std::string item;
    while (std::getline(list, item, ',')) {
      Rational m;
      try {
        m = parse_rational(item);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--m: ") + e.what());
      }
      if (m == 0)
        throw UsageError("--m: slope m_" + std::to_string(slopes.size() + 1) +
                         " is zero, but every g_p must be injective (g_p(a) = m_p * a needs m_p != 0)");
      slopes.push_back(m);
    }
    if (slopes.size() != static_cast<std::size_t>(flags.n))
      throw UsageError("--m: expected " + std::to_string(flags.n) + " slopes, got " + std::to_string(slopes.size()));
  }
  return AlgebraConfig(flags.n, std::move(slopes));
}

Box parse_box(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("missing comma");
    std::size_t used = 0;
    const long a = std::stol(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("trailing characters");
    const std::string rest = text.substr(comma + 1);
    const long i = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing characters");
    if (a < 0 || i < 0) throw std::invalid_argument("negative bound");
    return Box{a, i};
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected two non-negative integers 'A,I', got '" + text + "'");
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::string format_degree(const Degree& d) {
  std::ostringstream out;
  out << '(';
  for (std::size_t r = 0; r < d.values.size(); ++r) out << (r ? "," : "") << d.values[r];
  out << ')';
  return out.str();
}

const char* stop_name(StopReason s) {
  switch (s) {
    case StopReason::targets_reached: return "targets-reached";
    case StopReason::fixpoint: return "fixpoint";
    case StopReason::iteration_limit: return "iteration-limit";
  }
  return "unknown";
}

void print_decomposition(std::ostream& out, const Decomposition& d) {
  out << "G = " << format_element(d.inner) << '\n';
  out << "c = " << to_string(d.c) << '\n';
  out << "s = " << to_string(d.s) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for the generalized Witt algebras W(g_p, n)", "gwitt"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--n", flags.n, "rank n")->capture_default_str();
  app.add_option("--m", flags.slopes, "comma-separated non-zero slopes m_1..m_n of g_p (default all 1)");
  app.add_option("--seed", flags.seed, "seed for randomized commands")->capture_default_str();

  std::string x_text, y_text, file_path;
  std::string mbox_text = "2,2", rbox_text = "4,4", box_text = "1,1", window_text;
  int max_iter = 20;
  int trials = 100;

  auto* cmd_bracket = app.add_subcommand("bracket", "print [X, Y]");
  cmd_bracket->add_option("x", x_text)->required();
  cmd_bracket->add_option("y", y_text)->required();

  auto* cmd_grade = app.add_subcommand("grade", "homogeneous components, degrees descending");
  cmd_grade->add_option("x", x_text)->required();

  auto* cmd_cmp = app.add_subcommand("cmp", "lexicographic comparison of two basis elements");
  cmd_cmp->add_option("x", x_text)->required();
  cmd_cmp->add_option("y", y_text)->required();

  auto* cmd_st = app.add_subcommand("st", "string number (count of distinct degrees)");
  cmd_st->add_option("x", x_text)->required();

  auto* cmd_lp = app.add_subcommand("lp", "largest lower index");
  cmd_lp->add_option("x", x_text)->required();

  auto* cmd_lemma1 = app.add_subcommand("lemma1", "multiplier M with all lower indices of [M, l] positive");
  cmd_lemma1->add_option("l", x_text)->required();

  auto* cmd_ideal = app.add_subcommand("ideal-witness", "bounded closure of the ideal generated by l");
  cmd_ideal->add_option("l", x_text)->required();
  cmd_ideal->add_option("--mbox", mbox_text, "multiplier box A,I")->capture_default_str();
  cmd_ideal->add_option("--rbox", rbox_text, "result box A,I")->capture_default_str();
  cmd_ideal->add_option("--max-iter", max_iter, "breadth-first rounds")->capture_default_str();

  auto* cmd_ad = app.add_subcommand("ad-diag", "search for m with [l, m] not proportional to m");
  cmd_ad->add_option("l", x_text)->required();
  cmd_ad->add_option("--box", box_text, "search box A,I")->capture_default_str();

  auto* cmd_integrate = app.add_subcommand("integrate", "antiderivative in F[e^{±x}, x] (rank one)");
  cmd_integrate->add_option("f", x_text, "function such as \"(1|1) - 2*(0|3)\"")->required();

  auto* cmd_verify = app.add_subcommand("verify-derivation", "check the derivation identity on a table");
  cmd_verify->add_option("file", file_path, "table file, '-' for stdin")->required();

  auto* cmd_decompose = app.add_subcommand("decompose", "split a derivation table into inner and scalar parts");
  cmd_decompose->add_option("file", file_path, "table file, '-' for stdin")->required();
  cmd_decompose->add_option("--window", window_text, "window A,I (default: inferred from the keys)");

  auto* cmd_selftest = app.add_subcommand("selftest", "randomized property suites");
  cmd_selftest->add_option("--trials", trials, "trials per suite")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const AlgebraConfig cfg = make_config(flags);
    const int n = cfg.rank();

    if (cmd_bracket->parsed()) {
      out << format_element(bracket(cfg, parse_element(x_text, n), parse_element(y_text, n))) << '\n';
    } else if (cmd_grade->parsed()) {
      const auto parts = decompose(parse_element(x_text, n));
      if (parts.empty()) out << "0\n";
      for (const auto& [degree, part] : parts) out << format_degree(degree) << ": " << format_element(part) << '\n';
    } else if (cmd_cmp->parsed()) {
      const auto order = lex_cmp(parse_basis(x_text, n), parse_basis(y_text, n));
      out << (order < 0 ? "<" : order > 0 ? ">" : "=") << '\n';
    } else if (cmd_st->parsed()) {
      out << string_number(parse_element(x_text, n)) << '\n';
    } else if (cmd_lp->parsed()) {
      const Element x = parse_element(x_text, n);
      if (x.is_zero()) throw UsageError("lp is undefined on the zero element");
      out << lp(x) << '\n';
    } else if (cmd_lemma1->parsed()) {
      const Element l = parse_element(x_text, n);
      if (l.is_zero()) throw UsageError("lemma1 needs a non-zero element");
      const Lemma1Result r = lemma1_multiplier(cfg, l);
      out << "multiplier: " << format_basis(r.multiplier) << '\n';
      out << "bracket: " << format_element(r.result) << '\n';
    } else if (cmd_ideal->parsed()) {
      const Element l = parse_element(x_text, n);
      if (l.is_zero()) throw UsageError("ideal-witness needs a non-zero generator");
      const Box rbox = parse_box(rbox_text, "--rbox");
      if (!rbox.contains(l)) throw UsageError("--rbox must contain the support of the generator");
      if (max_iter < 0) throw UsageError("--max-iter must be non-negative");
      const IdealClosure closure = ideal_closure(cfg, l, parse_box(mbox_text, "--mbox"), rbox, max_iter);
      const ClosureReport& r = closure.report;
      out << "generator: " << format_element(r.generator) << '\n';
      out << "multipliers: " << r.multiplier_count << '\n';
      out << "rank: " << r.rank << '\n';
      out << "iterations: " << r.iterations << '\n';
      out << "reached:";
      for (int k : r.reached_targets) out << ' ' << format_basis(closure_target(cfg, k));
      out << '\n';
      out << "saturated: " << (r.saturated ? "yes" : "no") << '\n';
      out << "stop: " << stop_name(r.stop) << '\n';
      return r.saturated ? kExitOk : kExitMathFailure;
    } else if (cmd_ad->parsed()) {
      const Element l = parse_element(x_text, n);
      if (l.is_zero()) throw UsageError("ad-diag needs a non-zero element");
      const auto witness = ad_diag_check(cfg, l, parse_box(box_text, "--box"));
      out << (witness ? format_basis(*witness) : std::string("passes box")) << '\n';
    } else if (cmd_integrate->parsed()) {
      if (n != 1) throw UsageError("integrate works on rank one (--n 1)");
      const FunctionElement f = parse_function(x_text, n);
      for (const auto& t : f)
        if (t.key.lower(0) < 0) throw UsageError("integrate needs non-negative lower indices");
      out << format_function(integrate(cfg, f)) << '\n';
    } else if (cmd_verify->parsed()) {
      if (n != 1) throw UsageError("derivation tables are rank one (--n 1)");
      const DerivationTable table = parse_derivation_table(read_source(file_path, in));
      const auto violations = verify_derivation(cfg, table);
      out << "entries: " << table.images().size() << '\n';
      out << "violations: " << violations.size() << '\n';
      for (const auto& v : violations) out << format_basis(v.left) << ' ' << format_basis(v.right) << '\n';
      return violations.empty() ? kExitOk : kExitMathFailure;
    } else if (cmd_decompose->parsed()) {
      if (n != 1) throw UsageError("derivation tables are rank one (--n 1)");
      std::optional<PlusWindow> window;
      if (!window_text.empty()) {
        const Box box = parse_box(window_text, "--window");
        window = PlusWindow{box.upper_bound, box.lower_bound};
      }
      const DerivationTable table = parse_derivation_table(read_source(file_path, in), window);
      try {
        print_decomposition(out, decompose(cfg, table));
      } catch (const NotADerivation& e) {
        out << e.what() << '\n';
        for (const auto& b : e.partial().residuals) out << "residual: " << format_basis(b) << '\n';
        return kExitMathFailure;
      }
    } else if (cmd_selftest->parsed()) {
      if (trials < 1) throw UsageError("--trials must be positive");
      const auto results = run_selftest(cfg, flags.seed, trials);
      int passed = 0;
      for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.trials - r.failures << '/' << r.trials << ")";
        if (!r.passed()) out << ": " << r.first_failure;
        out << '\n';
        passed += r.passed() ? 1 : 0;
      }
      out << "selftest seed " << flags.seed << " n " << n << ": " << passed << '/' << results.size()
          << " suites passed\n";
      return passed == static_cast<int>(results.size()) ? kExitOk : kExitMathFailure;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMathFailure;
  }
}

}  // namespace gwitt
