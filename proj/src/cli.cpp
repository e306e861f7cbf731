#include "coxkl/cli.hpp"

#include "coxkl/error.hpp"
#include "coxkl/render.hpp"
#include "coxkl/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace coxkl {

namespace {

using nlohmann::json;

struct CliConfig {
  std::string group;
  std::string command;
  std::string u_word;
  std::string w_word;
  std::string format = "text";
  std::string cache_path;
  std::uint64_t guard = kDefaultOrderGuard;
  std::string checks = "all";
  std::string kinds = "R,Rt,KL";
  int find_boolean = 0;
  bool big = false;
};

// Groups this large only run `classify` with --big.
constexpr std::uint64_t kClassifyBigOrder = 1152;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not available for " + cfg.command);
}

json integers_to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

class Session {
 public:
  Session(const CliConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg),
        out_(out),
        err_(err),
        ctx_(GroupContext::build(cfg.group, cfg.guard)),
        kl_(ctx_) {
    if (!cfg_.cache_path.empty()) {
      std::ifstream in(cfg_.cache_path);
      if (in) {
        const auto st = load_cache(in, kl_);
        err_ << "cache: " << st.accepted << " entries loaded, " << st.rejected << " rejected, "
             << st.foreign << " for other groups\n";
      }
    }
  }

  int run() {
    int code = kExitOk;
    if (cfg_.command == "table") code = table();
    else if (cfg_.command == "verify") code = verify();
    else if (cfg_.command == "graph") code = graph();
    else if (cfg_.command == "classify") code = classify();
    else if (cfg_.command == "scan-brenti") code = scan_brenti();
    if (!cfg_.cache_path.empty()) {
      std::ofstream os(cfg_.cache_path, std::ios::trunc);
      if (!os) throw UsageError("cannot write cache file '" + cfg_.cache_path + "'");
      save_cache(os, kl_);
    }
    return code;
  }

 private:
  ElementId element(const std::string& word, ElementId fallback) const {
    return word.empty() ? fallback : ctx_.parse_element(word);
  }

  std::pair<ElementId, ElementId> pair_arguments() {
    const ElementId u = element(cfg_.u_word, ctx_.identity());
    const ElementId w = element(cfg_.w_word, ctx_.longest());
    if (!kl_.order().le(u, w))
      throw UsageError("incomparable: " + ctx_.format_element(u) + " is not below " +
                       ctx_.format_element(w));
    return {u, w};
  }

  int table() {
    require_format(cfg_, {"text", "json"});
    const auto [u, w] = pair_arguments();
    std::vector<PolyKind> kinds;
    for (const auto& k : split_csv(cfg_.kinds)) kinds.push_back(parse_kind(k));
    auto& order = kl_.order();
    const int len = ctx_.length(w) - ctx_.length(u);
    const int a = order.absolute_length(u, w);
    const int df = order.defect(u, w);
    std::optional<FHDecomposition> fh;
    if (u != w) fh = kl_.fh_vectors(u, w);

    if (cfg_.format == "json") {
      json j = {{"group", ctx_.name()},
                {"u", ctx_.format_element(u)},
                {"w", ctx_.format_element(w)},
                {"length", len},
                {"abs_len", a},
                {"defect", df}};
      for (PolyKind k : kinds) {
        switch (k) {
          case PolyKind::R:
            j["R"] = poly_to_json(kl_.r_poly(u, w));
            j["R_shifted"] = poly_to_json(to_shifted(kl_.r_poly(u, w)));
            break;
          case PolyKind::Rtilde: j["Rt"] = poly_to_json(kl_.rtilde_poly(u, w)); break;
          case PolyKind::KL: j["KL"] = poly_to_json(kl_.kl_poly(u, w)); break;
        }
      }
      if (fh) {
        j["f"] = integers_to_json(fh->f);
        j["h"] = integers_to_json(fh->h);
      }
      out_ << j.dump(2) << '\n';
      return kExitOk;
    }
    out_ << "group    " << ctx_.name() << '\n'
         << "u        " << ctx_.format_element(u) << '\n'
         << "w        " << ctx_.format_element(w) << '\n'
         << "l(u,w)   " << len << '\n'
         << "a(u,w)   " << a << '\n'
         << "df(u,w)  " << df << '\n';
    for (PolyKind k : kinds) {
      switch (k) {
        case PolyKind::R:
          out_ << "R        " << to_string(kl_.r_poly(u, w)) << '\n'
               << "R        " << to_string(to_shifted(kl_.r_poly(u, w))) << '\n';
          break;
        case PolyKind::Rtilde:
          out_ << "R~       " << to_string(kl_.rtilde_poly(u, w)) << '\n';
          break;
        case PolyKind::KL:
          out_ << "P        " << to_string(kl_.kl_poly(u, w)) << '\n';
          break;
      }
    }
    if (fh) {
      out_ << "f        " << join(fh->f) << '\n' << "h        " << join(fh->h) << '\n';
    } else {
      out_ << "f        (trivial interval)\n";
    }
    return kExitOk;
  }

  int verify() {
    require_format(cfg_, {"text", "json"});
    const auto reports = run_suite(kl_, split_csv(cfg_.checks));
    if (cfg_.format == "json") {
      json a = json::array();
      for (const auto& r : reports) a.push_back(report_to_json(r));
      out_ << a.dump(2) << '\n';
    } else {
      out_ << summary_table(reports);
      out_ << (all_passed(reports) ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    }
    return all_passed(reports) ? kExitOk : kExitCheckFailed;
  }

  int graph() {
    if (cfg_.format == "text") cfg_format_ = "dot";
    else cfg_format_ = cfg_.format;
    if (cfg_format_ != "dot" && cfg_format_ != "json")
      throw UsageError("format '" + cfg_.format + "' is not available for graph");
    IntervalData d;
    if (cfg_.find_boolean > 0) {
      auto found = find_boolean_interval(cfg_.find_boolean);
      if (!found)
        throw UsageError("no boolean interval of length " + std::to_string(cfg_.find_boolean) +
                         " in " + ctx_.name());
      d = std::move(*found);
    } else {
      const auto [u, w] = pair_arguments();
      d = kl_.order().interval(u, w);
    }
    if (cfg_format_ == "json") out_ << interval_to_json(ctx_, d).dump(2) << '\n';
    else out_ << interval_to_dot(ctx_, d);
    return kExitOk;
  }

  // First interval (by top, then bottom id) of the given length whose
  // poset is a boolean lattice on its atoms.
  std::optional<IntervalData> find_boolean_interval(int len) {
    auto& order = kl_.order();
    for (ElementId w = 0; w < ctx_.size(); ++w)
      for (ElementId u : order.lower_set(w)) {
        if (ctx_.length(w) - ctx_.length(u) != len) continue;
        IntervalData d = order.interval(u, w);
        if (d.members.size() != (std::size_t{1} << len)) continue;
        std::vector<ElementId> atoms;
        for (ElementId v : d.members)
          if (ctx_.length(v) == ctx_.length(u) + 1) atoms.push_back(v);
        if (atoms.size() != static_cast<std::size_t>(len)) continue;
        std::vector<unsigned> masks;
        for (ElementId v : d.members) {
          unsigned m = 0;
          for (std::size_t k = 0; k < atoms.size(); ++k)
            if (order.le(atoms[k], v)) m |= 1u << k;
          masks.push_back(m);
        }
        bool boolean = true;
        for (std::size_t i = 0; boolean && i < masks.size(); ++i)
          for (std::size_t j = 0; boolean && j < masks.size(); ++j)
            boolean = (((masks[i] & ~masks[j]) == 0) == order.le(d.members[i], d.members[j])) &&
                      (i == j || masks[i] != masks[j]);
        if (boolean) return d;
      }
    return std::nullopt;
  }

  int classify() {
    require_format(cfg_, {"text", "json"});
    if (ctx_.size() >= kClassifyBigOrder && !cfg_.big)
      throw UsageError("classify on " + ctx_.name() + " (order " + std::to_string(ctx_.size()) +
                       ") needs --big");
    auto& order = kl_.order();
    json rows = json::array();
    std::size_t count = 0;
    for (ElementId w = 0; w < ctx_.size(); ++w)
      for (ElementId u : order.lower_set(w)) {
        const IntPoly& p = kl_.kl_poly(u, w);
        if (p.is_one()) continue;
        ++count;
        const auto strict = kl_.strict_edges(u, w);
        const auto path = kl_.strict_path_to_smooth(u, w);
        const int df = order.defect(u, w);
        if (cfg_.format == "json") {
          rows.push_back({{"u", ctx_.format_element(u)},
                          {"w", ctx_.format_element(w)},
                          {"P", poly_to_json(p)},
                          {"P_at_1", integer_to_json(eval_int(p, 1))},
                          {"defect", df},
                          {"strict_edges", strict.size()},
                          {"path_end", ctx_.format_element(path.back())},
                          {"path_length", path.size() - 1}});
        } else {
          out_ << "w = " << ctx_.format_element(w) << "  u = " << ctx_.format_element(u)
               << "  P = " << to_string(p) << "  P(1) = " << eval_int(p, 1) << "  df = " << df
               << "  strict = " << strict.size() << "  path -> "
               << ctx_.format_element(path.back()) << " (" << path.size() - 1 << " steps)\n";
        }
      }
    if (cfg_.format == "json")
      out_ << json{{"group", ctx_.name()}, {"singular", rows}}.dump(2) << '\n';
    else
      out_ << count << " singular pairs in " << ctx_.name() << '\n';
    return kExitOk;
  }

  int scan_brenti() {
    require_format(cfg_, {"text", "json"});
    const CheckReport r = run_check("brenti_scan", kl_);
    const auto it = r.stats.find("max_excess");
    const std::int64_t max_excess = it == r.stats.end() ? 0 : it->second;
    const bool found = r.stats.at("excess_found") != 0;
    if (cfg_.format == "json") {
      out_ << json{{"group", ctx_.name()},
                   {"pairs", r.pairs_tested},
                   {"max_excess", max_excess},
                   {"excess_found", found},
                   {"findings", r.notes}}
                  .dump(2)
           << '\n';
    } else {
      out_ << "group " << ctx_.name() << ": max |[q^n]R| - binom(l, n) = " << max_excess
           << " over " << r.pairs_tested << " pairs; "
           << (found ? "EXCESS FOUND (finding, not a failure)" : "no excess") << '\n';
      for (const auto& n : r.notes) out_ << "  " << n << '\n';
    }
    return kExitOk;
  }

  const CliConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  GroupContext ctx_;
  KLContext kl_;
  std::string cfg_format_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Bruhat graphs, R- and Kazhdan-Lusztig polynomials of finite Weyl groups",
               "coxkl"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group,-g", cfg.group, "Weyl group, e.g. A3, B2, G2, F4")->required();
  app.add_option("--format", cfg.format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--cache", cfg.cache_path, "newline-delimited JSON polynomial cache");
  app.add_option("--guard", cfg.guard, "maximum group order to enumerate");
  app.add_flag("--big", cfg.big, "allow classify on groups of order >= 1152");

  auto* table = app.add_subcommand("table", "R, R~, KL polynomials and f/h vectors of a pair");
  auto* verify = app.add_subcommand("verify", "run the theorem checks over the whole group");
  auto* graph = app.add_subcommand("graph", "export the Bruhat graph of an interval");
  app.add_subcommand("classify", "list singular pairs");
  app.add_subcommand("scan-brenti", "compare |[q^n]R| with binomials");
  for (auto* sub : {table, graph}) {
    sub->add_option("--u", cfg.u_word, "bottom element as a reduced word (default e)");
    sub->add_option("--w", cfg.w_word, "top element as a reduced word (default w0)");
  }
  table->add_option("--kinds", cfg.kinds, "comma-separated subset of R,Rt,KL");
  verify->add_option("--checks", cfg.checks, "comma-separated check names, or all");
  graph->add_option("--find-boolean", cfg.find_boolean,
                    "export the first boolean interval of this length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Session session(cfg, out, err);
    return session.run();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace coxkl
