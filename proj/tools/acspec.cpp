#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "acspec/bounds.hpp"
#include "acspec/groupoid.hpp"
#include "acspec/sequences.hpp"
#include "acspec/spectrum.hpp"
#include "acspec/term.hpp"

namespace {

using nlohmann::json;
using namespace acspec;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

struct Range {
  int from = 1, to = 1;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + s + "', expected N or N..M");
  }
}

Groupoid resolve_groupoid(const std::string& name, const std::string& table_path) {
  if (!name.empty() && !table_path.empty())
    throw std::invalid_argument("give either --groupoid or --table, not both");
  if (!name.empty()) return registry(name);
  if (!table_path.empty()) return load_cayley_file(table_path);
  throw std::invalid_argument("one of --groupoid or --table is required");
}

// catalog identities read best with their letter names (labels 1..5)
std::string format_letters(const Term& t) {
  static constexpr const char* kNames[] = {"v", "w", "x", "y", "z"};
  std::function<std::string(const Term&, bool)> go = [&](const Term& u, bool parens) {
    if (u.is_leaf())
      return u.var() <= 5 ? std::string(kNames[u.var() - 1]) : "x" + std::to_string(u.var());
    std::string s = go(u.left(), true) + go(u.right(), true);
    return parens ? "(" + s + ")" : s;
  };
  return go(t, false);
}

void emit_csv_rows(std::ostream& os, const std::vector<std::pair<int, std::string>>& rows,
                   const std::string& engine, bool truncated) {
  os << "n,value,engine,truncated\n";
  for (const auto& [n, value] : rows)
    os << n << ',' << value << ',' << engine << ',' << (truncated ? "true" : "false") << '\n';
}

int emit_spectrum(const SpectrumReport& r, const std::string& format) {
  if (format == "json") {
    json doc{{"command", r.kind == SpectrumKind::associative ? "spectrum" : "ac-spectrum"},
             {"groupoid", r.groupoid},
             {"kind", r.kind == SpectrumKind::associative ? "associative" : "ac"},
             {"engine", r.engine == Engine::dp ? "dp" : "naive"},
             {"nmax", r.requested_n},
             {"values", r.values},
             {"truncated", r.truncated}};
    json per_n = json::array();
    for (size_t i = 0; i < r.values.size(); ++i)
      per_n.push_back({{"n", i + 1},
                       {"value", r.values[i]},
                       {"wall_ms", r.wall_ms[i]},
                       {"distinct_bytes", r.distinct_bytes[i]}});
    doc["per_n"] = per_n;
    std::cout << doc.dump(2) << '\n';
  } else if (format == "csv") {
    std::vector<std::pair<int, std::string>> rows;
    for (size_t i = 0; i < r.values.size(); ++i)
      rows.emplace_back(static_cast<int>(i + 1), std::to_string(r.values[i]));
    emit_csv_rows(std::cout, rows, r.engine == Engine::dp ? "dp" : "naive", r.truncated);
  } else {
    for (size_t i = 0; i < r.values.size(); ++i) std::cout << (i ? " " : "") << r.values[i];
    std::cout << '\n';
  }
  if (r.truncated) {
    std::cerr << "truncated: cap reached after n=" << r.values.size() << "\n";
    return kExitTruncated;
  }
  return kExitOk;
}

json report_to_json(const VerificationReport& r) {
  json doc{{"profile", r.profile},
           {"groupoid", r.groupoid},
           {"verdict", to_string(r.verdict)},
           {"expected_attains", r.expected_attains},
           {"truncated", r.truncated}};
  if (!r.note.empty()) doc["note"] = r.note;
  if (!r.identity_checks.empty()) {
    json ids = json::array();
    for (const auto& [label, pass] : r.identity_checks)
      ids.push_back({{"label", label}, {"pass", pass}});
    doc["identity_checks"] = ids;
  }
  if (r.hypothesis_pass) doc["hypothesis_pass"] = *r.hypothesis_pass;
  auto lines = [](const std::vector<BoundLine>& ls) {
    json arr = json::array();
    for (const BoundLine& l : ls)
      arr.push_back(
          {{"n", l.n}, {"value", l.value}, {"bound", l.bound}, {"rel", std::string(1, l.rel)}});
    return arr;
  };
  doc["assoc"] = lines(r.assoc_lines);
  doc["ac"] = lines(r.ac_lines);
  return doc;
}

void print_report_text(const VerificationReport& r) {
  std::cout << r.profile << " / " << r.groupoid << ": " << to_string(r.verdict);
  if (r.truncated) std::cout << " (truncated)";
  std::cout << '\n';
  if (!r.note.empty()) std::cout << "  " << r.note << '\n';
  for (const auto& [label, pass] : r.identity_checks)
    if (!pass) std::cout << "  identity (" << label << ") fails\n";
  if (r.hypothesis_pass && !*r.hypothesis_pass) std::cout << "  depth hypothesis fails\n";
  if (r.verdict == Verdict::attains) return;
  auto dump = [](const char* tag, const std::vector<BoundLine>& ls) {
    if (ls.empty()) return;
    std::cout << "  " << tag << ":";
    for (const BoundLine& l : ls) std::cout << ' ' << l.value << l.rel << l.bound;
    std::cout << '\n';
  };
  dump("assoc", r.assoc_lines);
  dump("ac", r.ac_lines);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"associative and ac spectra of finite groupoids"};
  app.require_subcommand(1);

  std::string groupoid_name, table_path, format = "text", engine_name = "dp";
  int nmax = 6, threads = 1;
  uint64_t max_functions = SpectrumOptions{}.max_functions;

  auto add_common = [&](CLI::App* sub, bool with_engine) {
    sub->add_option("--groupoid", groupoid_name, "registry groupoid name");
    sub->add_option("--table", table_path, "Cayley table file (text or JSON)");
    sub->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_engine) {
      sub->add_option("--nmax", nmax, "largest arity to compute");
      sub->add_option("--engine", engine_name, "dp|naive")->check(CLI::IsMember({"dp", "naive"}));
      sub->add_option("--threads", threads, "worker threads within one level");
      sub->add_option("--max-functions", max_functions, "distinct-table cap per level");
    }
  };

  CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "associative spectrum");
  add_common(cmd_spectrum, true);
  CLI::App* cmd_ac = app.add_subcommand("ac-spectrum", "associative-commutative spectrum");
  add_common(cmd_ac, true);

  CLI::App* cmd_ids = app.add_subcommand("identities", "check the catalog identities");
  add_common(cmd_ids, false);

  int nmax_assoc = 9, nmax_ac = 6;
  std::string profile_name;
  CLI::App* cmd_verify = app.add_subcommand("verify", "replay the bound catalog");
  cmd_verify->add_option("--profile", profile_name, "only this profile");
  cmd_verify->add_option("--groupoid", groupoid_name, "only this groupoid");
  cmd_verify->add_option("--nmax-assoc", nmax_assoc, "assoc spectrum depth");
  cmd_verify->add_option("--nmax-ac", nmax_ac, "ac spectrum depth");
  cmd_verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cmd_verify->add_option("--threads", threads);

  std::string a_name, b_name;
  bool anti = false;
  CLI::App* cmd_classify = app.add_subcommand("classify", "isomorphism / anti-isomorphism test");
  cmd_classify->add_option("--a", a_name, "registry name or table file")->required();
  cmd_classify->add_option("--b", b_name, "registry name or table file")->required();
  cmd_classify->add_flag("--anti", anti, "search for an anti-isomorphism");
  cmd_classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_registry = app.add_subcommand("registry", "list the embedded groupoids");
  cmd_registry->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string kind_name = "full", scope_name = "bracketings", range_text = "1";
  int modulus = 1;
  CLI::App* cmd_depth = app.add_subcommand("depth-classes", "depth-congruence class counts");
  cmd_depth->add_option("--kind", kind_name, "full|left|right|leftmost-left")
      ->check(CLI::IsMember({"full", "left", "right", "leftmost-left"}));
  cmd_depth->add_option("--k", modulus, "congruence modulus")->required();
  cmd_depth->add_option("--scope", scope_name, "bracketings|full-linear")
      ->check(CLI::IsMember({"bracketings", "full-linear"}));
  cmd_depth->add_option("--n", range_text, "arity N or range N..M")->required();
  cmd_depth->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  std::string seq_name;
  std::optional<unsigned> seq_k;
  unsigned seq_k_raw = 0;
  CLI::App* cmd_seq = app.add_subcommand("seq", "exact sequence values");
  cmd_seq->add_option("name", seq_name, "formula label, e.g. C_{n-1} or A185109")->required();
  CLI::Option* seq_k_opt = cmd_seq->add_option("--k", seq_k_raw, "formula parameter");
  cmd_seq->add_option("--n", range_text, "N or N..M")->required();
  cmd_seq->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    SpectrumOptions opts;
    opts.threads = threads;
    opts.max_functions = max_functions;

    if (cmd_spectrum->parsed() || cmd_ac->parsed()) {
      Groupoid g = resolve_groupoid(groupoid_name, table_path);
      Engine eng = engine_name == "dp" ? Engine::dp : Engine::naive;
      SpectrumReport r = cmd_spectrum->parsed() ? associative_spectrum(g, nmax, eng, opts)
                                                : ac_spectrum(g, nmax, eng, opts);
      if (r.groupoid.empty()) r.groupoid = groupoid_name.empty() ? table_path : groupoid_name;
      return emit_spectrum(r, format);
    }

    if (cmd_ids->parsed()) {
      Groupoid g = resolve_groupoid(groupoid_name, table_path);
      if (format == "json") {
        json checks = json::array();
        for (const Identity& id : identity_catalog())
          checks.push_back({{"label", id.label},
                            {"lhs", format_letters(id.lhs)},
                            {"rhs", format_letters(id.rhs)},
                            {"satisfied", satisfies_identity(g, id)}});
        std::cout << json{{"command", "identities"},
                          {"groupoid", g.name().empty() ? table_path : g.name()},
                          {"checks", checks}}
                         .dump(2)
                  << '\n';
      } else {
        for (const Identity& id : identity_catalog()) {
          std::cout << '(' << id.label << ") " << format_letters(id.lhs) << " = "
                    << format_letters(id.rhs) << "  "
                    << (satisfies_identity(g, id) ? "yes" : "no") << '\n';
        }
      }
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      std::vector<VerificationReport> reports;
      if (!profile_name.empty() || !groupoid_name.empty()) {
        std::vector<std::string> profiles =
            profile_name.empty() ? profile_names() : std::vector<std::string>{profile_name};
        for (const std::string& pn : profiles) {
          const BoundProfile& p = profile(pn);
          std::vector<std::string> targets;
          if (!groupoid_name.empty())
            targets = {groupoid_name};
          else if (p.kind == ProfileKind::factorial_relation)
            targets = registry_names();
          else
            targets = p.witnesses;
          for (const std::string& gn : targets) {
            VerificationReport r = verify(p, registry(gn), nmax_assoc, nmax_ac, opts);
            r.expected_attains =
                std::find(p.witnesses.begin(), p.witnesses.end(), gn) != p.witnesses.end();
            reports.push_back(std::move(r));
          }
        }
      } else {
        reports = verify_all(nmax_assoc, nmax_ac, opts);
      }
      bool pass = all_reports_pass(reports);
      bool truncated = false;
      for (const auto& r : reports) truncated |= r.truncated;
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::cout << json{{"command", "verify"},
                          {"nmax_assoc", nmax_assoc},
                          {"nmax_ac", nmax_ac},
                          {"pass", pass},
                          {"reports", arr}}
                         .dump(2)
                  << '\n';
      } else {
        for (const auto& r : reports) print_report_text(r);
        std::cout << (pass ? "PASS" : "FAIL") << " (" << reports.size() << " reports)\n";
      }
      if (!pass) return kExitVerifyFail;
      return truncated ? kExitTruncated : kExitOk;
    }

    if (cmd_classify->parsed()) {
      auto load = [](const std::string& s) {
        try {
          return registry(s);
        } catch (const std::invalid_argument&) {
          return load_cayley_file(s);
        }
      };
      Groupoid a = load(a_name), b = load(b_name);
      auto witness = find_isomorphism(a, b, anti);
      if (format == "json") {
        json doc{{"command", "classify"},
                 {"a", a_name},
                 {"b", b_name},
                 {"anti", anti},
                 {"found", witness.has_value()}};
        if (witness) doc["witness"] = *witness;
        std::cout << doc.dump(2) << '\n';
      } else if (witness) {
        std::cout << (anti ? "anti-isomorphism:" : "isomorphism:");
        for (size_t i = 0; i < witness->size(); ++i)
          std::cout << ' ' << i << "->" << static_cast<int>((*witness)[i]);
        std::cout << '\n';
      } else {
        std::cout << (anti ? "anti-isomorphism: none" : "isomorphism: none") << '\n';
      }
      return kExitOk;
    }

    if (cmd_registry->parsed()) {
      if (format == "json") {
        json arr = json::array();
        for (const std::string& name : registry_names()) {
          const Groupoid& g = registry(name);
          json rows = json::array();
          for (int a = 0; a < g.size(); ++a) {
            json row = json::array();
            for (int b = 0; b < g.size(); ++b) row.push_back(g.apply(a, b));
            rows.push_back(row);
          }
          arr.push_back({{"name", name}, {"size", g.size()}, {"table", rows}});
        }
        std::cout << json{{"command", "registry"}, {"groupoids", arr}}.dump(2) << '\n';
      } else {
        for (const std::string& name : registry_names()) {
          const Groupoid& g = registry(name);
          std::cout << name << " (size " << g.size() << "):";
          for (int a = 0; a < g.size(); ++a) {
            std::cout << (a ? " / " : " ");
            for (int b = 0; b < g.size(); ++b) std::cout << static_cast<int>(g.apply(a, b));
          }
          std::cout << '\n';
        }
      }
      return kExitOk;
    }

    if (cmd_depth->parsed()) {
      Range range = parse_range(range_text);
      DepthClassKind kind = kind_name == "full"    ? DepthClassKind::full
                            : kind_name == "left"  ? DepthClassKind::left
                            : kind_name == "right" ? DepthClassKind::right
                                                   : DepthClassKind::leftmost_left;
      TermScope scope =
          scope_name == "bracketings" ? TermScope::bracketings : TermScope::full_linear;
      std::vector<std::pair<int, uint64_t>> counts;
      for (int n = range.from; n <= range.to; ++n)
        counts.emplace_back(n, count_depth_classes({n, modulus, kind, scope}));
      if (format == "json") {
        json vals = json::array();
        for (auto [n, c] : counts) vals.push_back({{"n", n}, {"value", c}});
        std::cout << json{{"command", "depth-classes"},
                          {"kind", kind_name},
                          {"modulus", modulus},
                          {"scope", scope_name},
                          {"values", vals}}
                         .dump(2)
                  << '\n';
      } else if (format == "csv") {
        std::vector<std::pair<int, std::string>> rows;
        for (auto [n, c] : counts) rows.emplace_back(n, std::to_string(c));
        emit_csv_rows(std::cout, rows, "", false);
      } else {
        for (auto [n, c] : counts) std::cout << c << '\n';
      }
      return kExitOk;
    }

    if (cmd_seq->parsed()) {
      if (seq_k_opt->count() > 0) seq_k = seq_k_raw;
      Range range = parse_range(range_text);
      SequenceOracle o = bound_formula(seq_name, seq_k);
      std::vector<std::pair<int, std::string>> rows;
      for (int n = range.from; n <= range.to; ++n) rows.emplace_back(n, o(n).str());
      if (format == "json") {
        json vals = json::array();
        for (const auto& [n, v] : rows) vals.push_back({{"n", n}, {"value", v}});
        json doc{{"command", "seq"}, {"name", seq_name}, {"values", vals}};
        if (seq_k) doc["k"] = *seq_k;
        std::cout << doc.dump(2) << '\n';
      } else if (format == "csv") {
        emit_csv_rows(std::cout, rows, "", false);
      } else {
        for (const auto& [n, v] : rows) std::cout << v << '\n';
      }
      return kExitOk;
    }

    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
