#ifndef CLLR_CLI_HPP
#define CLLR_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cllr/errors.hpp"
#include "cllr/export.hpp"
#include "cllr/properties.hpp"
#include "cllr/refinement.hpp"
#include "cllr/semantics.hpp"
#include "cllr/syntax.hpp"

namespace cllr::cli {

enum ExitStatus : int { Pass = 0, Fail = 1, InputError = 2 };

struct CliConfig {
  std::size_t max_states = BuildLimits{}.max_states;
  std::size_t max_unfold_depth = BuildLimits{}.max_unfold_depth;
  std::string format = "text";
  std::uint64_t seed = 1;

  BuildLimits limits() const { return BuildLimits{max_states, max_unfold_depth}; }
};

/// A definition file after comment stripping and `let` expansion.
struct Script {
  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> terms;
};

namespace detail {

inline std::string strip_comment(const std::string &line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Replace whole-word uses of each defined name by its parenthesised text.
inline std::string expand(const std::string &text, const std::vector<std::pair<std::string, std::string>> &defs) {
  std::string out = text;
  for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
    std::regex word("\\b" + it->first + "\\b");
    out = std::regex_replace(out, word, "(" + it->second + ")");
  }
  return out;
}

} // namespace detail

/// Reads a term file: `#` starts a comment, `let NAME = TERM` defines NAME
/// for later lines, and every other non-blank line is a term.
inline Script read_script(std::istream &in) {
  static const std::regex let_re(R"(^let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$)");
  std::vector<std::pair<std::string, std::string>> defs;
  Script sc;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string body = detail::trim(detail::strip_comment(line));
    if (body.empty())
      continue;
    std::smatch m;
    if (std::regex_match(body, m, let_re)) {
      defs.emplace_back(m[1].str(), detail::expand(m[2].str(), defs));
      continue;
    }
    sc.terms.push_back({n, detail::expand(body, defs)});
  }
  return sc;
}

/// Parses a term that must be closed.
inline Term parse_closed(const std::string &src) {
  Term t = parse(src);
  auto fv = free_vars(t);
  if (!fv.empty()) {
    const std::string &x = *fv.begin();
    std::size_t at = 0;
    std::smatch m;
    if (std::regex_search(src, m, std::regex("\\b" + x + "\\b")))
      at = static_cast<std::size_t>(m.position(0));
    throw ParseError(SourceSpan{at, at + x.size()}, "free variable " + x + " in a term that must be closed");
  }
  return t;
}

/// Renders an error with the offending span underlined.
inline void report_error(std::ostream &err, const std::string &src, const std::exception &e,
                         const std::string &where = {}) {
  err << "error";
  if (!where.empty())
    err << " (" << where << ")";
  err << ": " << e.what() << '\n';
  std::optional<SourceSpan> span;
  if (auto *p = dynamic_cast<const ParseError *>(&e))
    span = p->span();
  else if (auto *g = dynamic_cast<const GuardednessError *>(&e))
    span = g->span();
  else if (auto *u = dynamic_cast<const UnboundRecVar *>(&e))
    span = u->span();
  if (span && span->start <= src.size()) {
    std::size_t len = std::max<std::size_t>(1, std::min(span->end, src.size()) - span->start);
    err << "  " << src << '\n' << "  " << std::string(span->start, ' ') << std::string(len, '^') << '\n';
  }
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err, std::istream &in = std::cin) {
  CLI::App app{"Refinement checker for conjunctive process terms with recursion", "cllr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cllr 1.0.0");

  CliConfig cfg;
  if (const char *env = std::getenv("LLTS_MAX_STATES")) {
    try {
      cfg.max_states = std::stoull(env);
    } catch (const std::exception &) {
      err << "error: LLTS_MAX_STATES is not a number: " << env << '\n';
      return InputError;
    }
  }

  auto add_limits = [&](CLI::App *sub) {
    sub->add_option("--max-states", cfg.max_states, "Bound on the number of terms explored")->capture_default_str();
    sub->add_option("--max-unfold-depth", cfg.max_unfold_depth, "Bound on nested recursion unfoldings")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App *sub, std::vector<std::string> allowed) {
    sub->add_option("--format,-f", cfg.format, "Output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };

  std::string file, term, left, right, only, baseline;
  std::size_t trials = 100;
  int depth = GenConfig{}.max_depth;

  auto *parse_cmd = app.add_subcommand("parse", "Parse a term file and print each term");
  parse_cmd->add_option("file", file, "File to read, or - for standard input")->required();

  auto *lts_cmd = app.add_subcommand("lts", "Print the transition system of a term");
  lts_cmd->add_option("term", term)->required();
  add_format(lts_cmd, {"text", "json", "dot"});
  add_limits(lts_cmd);

  auto *check_cmd = app.add_subcommand("check", "Decide whether a term is inconsistent");
  check_cmd->add_option("term", term)->required();
  add_limits(check_cmd);

  auto *refine_cmd = app.add_subcommand("refine", "Decide whether P is ready simulated by Q");
  refine_cmd->add_option("p", left)->required();
  refine_cmd->add_option("q", right)->required();
  add_format(refine_cmd, {"text", "json"});
  add_limits(refine_cmd);

  auto *equiv_cmd = app.add_subcommand("equiv", "Decide ready simulation equivalence");
  equiv_cmd->add_option("p", left)->required();
  equiv_cmd->add_option("q", right)->required();
  add_limits(equiv_cmd);

  auto *validate_cmd = app.add_subcommand("validate", "Check the transition system conditions");
  validate_cmd->add_option("term", term)->required();
  add_format(validate_cmd, {"text", "json"});
  add_limits(validate_cmd);

  auto *props_cmd = app.add_subcommand("props", "Run randomized theorem checks");
  props_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  props_cmd->add_option("--trials", trials)->capture_default_str();
  props_cmd->add_option("--depth", depth)->capture_default_str();
  props_cmd->add_option("--only", only)->check(CLI::IsMember(theorem_ids()));
  props_cmd->add_option("--baseline", baseline, "JSON list of {theorem, seed, trials}");
  add_format(props_cmd, {"text", "json"});
  add_limits(props_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return InputError;
  }

  std::string src;
  try {
    if (*parse_cmd) {
      std::ifstream fin;
      std::istream *is = &in;
      if (file != "-") {
        fin.open(file);
        if (!fin) {
          err << "error: cannot open " << file << '\n';
          return InputError;
        }
        is = &fin;
      }
      Script sc = read_script(*is);
      int status = Pass;
      for (const auto &line : sc.terms) {
        src = line.text;
        try {
          out << print(parse(src)) << '\n';
        } catch (const Error &e) {
          report_error(err, src, e, "line " + std::to_string(line.number));
          status = InputError;
        }
      }
      return status;
    }

    if (*lts_cmd) {
      src = term;
      Lts lts = build_lts(parse_closed(src), cfg.limits());
      if (cfg.format == "json")
        out << lts_to_json(lts).dump(2) << '\n';
      else if (cfg.format == "dot")
        out << lts_to_dot(lts);
      else
        out << lts_to_text(lts);
      return Pass;
    }

    if (*check_cmd) {
      src = term;
      Lts lts = build_lts(parse_closed(src), cfg.limits());
      bool bad = lts.in_f(lts.root());
      out << (bad ? "inconsistent" : "consistent") << '\n';
      return bad ? Fail : Pass;
    }

    if (*refine_cmd) {
      src = left;
      Term p = parse_closed(src);
      src = right;
      Term q = parse_closed(src);
      src.clear();
      auto v = refines(p, q, cfg.limits());
      if (cfg.format == "json")
        out << verdict_to_json(v).dump(2) << '\n';
      else
        out << verdict_to_text(v);
      return v.holds ? Pass : Fail;
    }

    if (*equiv_cmd) {
      src = left;
      Term p = parse_closed(src);
      src = right;
      Term q = parse_closed(src);
      src.clear();
      bool eq = equivalent(p, q, cfg.limits());
      out << (eq ? "equivalent" : "not equivalent") << '\n';
      return eq ? Pass : Fail;
    }

    if (*validate_cmd) {
      src = term;
      Lts lts = build_lts(parse_closed(src), cfg.limits());
      auto r = validate_llts(lts);
      if (cfg.format == "json") {
        out << validation_to_json(lts, r).dump(2) << '\n';
      } else {
        out << "tau-pure: " << (r.tau_pure ? "yes" : "no") << '\n';
        out << "LTS1: " << (r.lts1 ? "yes" : "no") << '\n';
        out << "LTS2: " << (r.lts2 ? "yes" : "no") << '\n';
        out << "forward tau F-propagation: " << (r.forward_tau_f ? "yes" : "no") << '\n';
        for (const auto &[s, what] : r.counterexamples)
          out << "  " << what << ": " << print(lts.universe[s]) << '\n';
      }
      return r.ok() ? Pass : Fail;
    }

    if (*props_cmd) {
      std::vector<BaselineEntry> runs;
      if (!baseline.empty()) {
        std::ifstream bin(baseline);
        if (!bin) {
          err << "error: cannot open " << baseline << '\n';
          return InputError;
        }
        runs = parse_baseline(nlohmann::json::parse(bin));
      } else {
        for (const auto &id : theorem_ids())
          if (only.empty() || only == id)
            runs.push_back({id, cfg.seed, trials});
      }
      nlohmann::json all = nlohmann::json::array();
      bool ok = true;
      for (const auto &r : runs) {
        GenConfig g;
        g.seed = r.seed;
        g.max_depth = depth;
        auto rep = run_theorem(r.theorem, g, r.trials, cfg.limits());
        ok = ok && rep.pass();
        if (cfg.format == "json") {
          auto j = report_to_json(rep);
          j["seed"] = r.seed;
          all.push_back(j);
          continue;
        }
        out << rep.theorem << ": " << (rep.pass() ? "pass" : "FAIL") << " (trials " << rep.trials << ", skipped "
            << rep.skipped << ", seed " << r.seed << ")\n";
        for (const auto &f : rep.failures) {
          out << "  observed: " << f.observed << "; expected: " << f.expected << '\n';
          for (const auto &i : f.inputs)
            out << "    " << i << '\n';
        }
      }
      if (cfg.format == "json")
        out << all.dump(2) << '\n';
      return ok ? Pass : Fail;
    }
  } catch (const Error &e) {
    report_error(err, src, e);
    return InputError;
  } catch (const nlohmann::json::exception &e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
  return InputError;
}

} // namespace cllr::cli

#endif // CLLR_CLI_HPP
