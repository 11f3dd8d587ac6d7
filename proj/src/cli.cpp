#include "indsets/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "indsets/bijection.hpp"
#include "indsets/checks.hpp"
#include "indsets/errors.hpp"
#include "indsets/genfunc.hpp"
#include "indsets/graph.hpp"
#include "indsets/oracle.hpp"
#include "indsets/transfer.hpp"

namespace indsets::cli {

namespace {

using nlohmann::json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings so that any JSON parser reproduces them exactly.
json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json poly_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(big_to_json(c));
  return arr;
}

struct Options {
  std::string family = "";
  int ell = 0;
  int n = 0;
  int n_max = 0;
  bool json = false;
  std::string source = "transfer";
  std::string interpretation = "literal";
  std::vector<std::string> families;
  std::vector<int> ells{3, 4};
  std::optional<int> single_n;
  std::optional<std::string> sequence;
  bool check = false;
  std::string format = "dot";
  std::string out_path;
};

Family family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw CLI::ValidationError("--family", "unknown family " + name);
  return *f;
}

EdgeInterpretation interpretation_or_throw(const std::string& name) {
  auto e = parse_interpretation(name);
  if (!e)
    throw CLI::ValidationError("--interpretation",
                               "unknown interpretation " + name);
  return *e;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int do_count(const Options& o, std::ostream& out) {
  const FamilySpec spec{family_or_throw(o.family), o.ell, o.n};
  const BigInt value = count(spec);
  if (o.json)
    emit(out, json{{"family", family_name(spec.family)},
                   {"ell", spec.ell},
                   {"n", spec.n},
                   {"value", big_to_json(value)}});
  else
    out << value << '\n';
  return kOk;
}

int do_series(const Options& o, std::ostream& out) {
  const Family f = family_or_throw(o.family);
  const auto values = count_series(f, o.ell, o.n_max);
  if (o.json) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(big_to_json(v));
    emit(out, json{{"family", family_name(f)},
                   {"ell", o.ell},
                   {"n_max", o.n_max},
                   {"values", arr}});
  } else {
    for (const auto& v : values) out << v << '\n';
  }
  return kOk;
}

int do_gf(const Options& o, std::ostream& out) {
  const Family f = family_or_throw(o.family);
  const RationalGF gf =
      o.source == "paper" ? paper_gf(f, o.ell) : gf_from_transfer(f, o.ell);
  if (o.json)
    emit(out, json{{"num", poly_to_json(gf.num())},
                   {"den", poly_to_json(gf.den())}});
  else
    out << gf.to_string() << '\n';
  return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const auto results = run_reference_checks();
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(
          json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(out, arr);
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ')';
      out << '\n';
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kOk : kVerificationFailed;
}

int do_oracle(const Options& o, std::ostream& out) {
  std::vector<Family> families;
  if (o.families.empty())
    families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  for (const auto& name : o.families) families.push_back(family_or_throw(name));
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<int> ells = o.ells;
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());
  const EdgeInterpretation interp = interpretation_or_throw(o.interpretation);

  std::vector<OracleReport> reports;
  for (Family f : families)
    for (int ell : ells) {
      const int lo = o.single_n.value_or(1);
      const int hi = o.single_n.value_or(o.n_max);
      for (int n = lo; n <= hi; ++n) reports.push_back(compare({f, ell, n}, interp));
    }

  if (o.json) {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back(json{{"family", family_name(r.spec.family)},
                         {"ell", r.spec.ell},
                         {"n", r.spec.n},
                         {"interpretation", interpretation_name(r.interpretation)},
                         {"oracle_count", big_to_json(r.oracle_count)},
                         {"transfer_count", big_to_json(r.transfer_count)},
                         {"agree", r.agree}});
    emit(out, arr);
  } else {
    for (const auto& r : reports)
      out << family_name(r.spec.family) << " ell=" << r.spec.ell
          << " n=" << r.spec.n << ' ' << interpretation_name(r.interpretation)
          << " oracle=" << r.oracle_count << " transfer=" << r.transfer_count
          << (r.agree ? " agree" : " DIFFER") << '\n';
  }
  return kOk;
}

int do_bijection(const Options& o, std::ostream& out) {
  if (o.sequence) {
    const Selection sel = from_sequence(parse_sequence(*o.sequence), o.n);
    if (o.json)
      emit(out, json{{"sequence", to_sequence(sel)},
                     {"selection", sel.to_set_string()},
                     {"levels", sel.to_tuple_string()}});
    else
      out << format_sequence(to_sequence(sel)) << " -> "
          << sel.to_tuple_string() << " -> " << sel.to_set_string() << '\n';
    return kOk;
  }

  const auto selections = independent_selections(o.n);
  if (o.check) {
    const auto sequences = valid_sequences(o.n);
    std::vector<OddEvenSeq> images;
    bool ok = true;
    for (const auto& sel : selections) {
      images.push_back(to_sequence(sel));
      ok = ok && from_sequence(images.back(), o.n) == sel;
    }
    std::sort(images.begin(), images.end());
    ok = ok && images == sequences;
    out << "n=" << o.n << " selections=" << selections.size()
        << " sequences=" << sequences.size() << (ok ? " PASS" : " FAIL")
        << '\n';
    return ok ? kOk : kVerificationFailed;
  }

  if (o.json) {
    json arr = json::array();
    for (const auto& sel : selections)
      arr.push_back(json{{"selection", sel.to_set_string()},
                         {"sequence", to_sequence(sel)}});
    emit(out, arr);
  } else {
    for (const auto& sel : selections)
      out << sel.to_set_string() << " -> " << format_sequence(to_sequence(sel))
          << '\n';
  }
  return kOk;
}

int do_export(const Options& o, std::ostream& out) {
  const FamilySpec spec{family_or_throw(o.family), o.ell, o.n};
  const ExplicitGraph g =
      build_graph(spec, interpretation_or_throw(o.interpretation));
  const std::string name = std::string(1, static_cast<char>(std::toupper(
                               family_name(spec.family)[0]))) +
                           "_" + std::to_string(o.ell) + "_" +
                           std::to_string(o.n);
  if (o.out_path.empty()) {
    write_dot(out, g, name);
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw std::runtime_error("cannot open " + o.out_path);
    write_dot(file, g, name);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact independent-set counts for iterated line-graph families",
               "indsets"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> family_names{"g", "r", "k", "p"};
  auto family_opt = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "graph family")
        ->required()
        ->check(CLI::IsMember(family_names, CLI::ignore_case));
  };
  auto json_flag = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* count_cmd = app.add_subcommand("count", "number of independent sets");
  family_opt(count_cmd);
  count_cmd->add_option("--ell", o.ell, "cycle size")->required();
  count_cmd->add_option("--n", o.n, "number of levels")->required();
  json_flag(count_cmd);

  auto* series_cmd = app.add_subcommand("series", "counts for n = 0..n-max");
  family_opt(series_cmd);
  series_cmd->add_option("--ell", o.ell, "cycle size")->required();
  series_cmd->add_option("--n-max", o.n_max, "last n")->required();
  json_flag(series_cmd);

  auto* gf_cmd = app.add_subcommand("gf", "generating function");
  family_opt(gf_cmd);
  gf_cmd->add_option("--ell", o.ell, "cycle size")->required();
  gf_cmd->add_option("--source", o.source, "transfer (computed) or paper (tabulated)")
      ->check(CLI::IsMember({"transfer", "paper"}));
  json_flag(gf_cmd);

  auto* verify_cmd =
      app.add_subcommand("verify-paper", "check all reference values");
  json_flag(verify_cmd);

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "brute-force counts on explicit graphs vs transfer counts");
  oracle_cmd->add_option("--family", o.families, "families (default all)")
      ->check(CLI::IsMember(family_names, CLI::ignore_case));
  oracle_cmd->add_option("--ell", o.ells, "cycle sizes (default 3 4)");
  oracle_cmd->add_option("--n", o.single_n, "single level count");
  o.n_max = 3;
  oracle_cmd->add_option("--n-max", o.n_max, "levels 1..n-max (default 3)");
  oracle_cmd->add_option("--interpretation", o.interpretation)
      ->check(CLI::IsMember({"literal", "algorithm"}));
  json_flag(oracle_cmd);

  auto* bij_cmd = app.add_subcommand(
      "bijection", "P_4^n independent sets <-> odd-neighbor subsequences");
  bij_cmd->add_option("--n", o.n, "number of levels")->required();
  bij_cmd->add_option("--sequence", o.sequence, "decode one sequence");
  bij_cmd->add_flag("--check", o.check, "exhaustive round-trip check");
  json_flag(bij_cmd);

  auto* export_cmd = app.add_subcommand("export-graph", "write the explicit graph");
  family_opt(export_cmd);
  export_cmd->add_option("--ell", o.ell, "cycle size")->required();
  export_cmd->add_option("--n", o.n, "number of levels")->required();
  export_cmd->add_option("--interpretation", o.interpretation)
      ->check(CLI::IsMember({"literal", "algorithm"}));
  export_cmd->add_option("--format", o.format)->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("--out", o.out_path, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsageError;
  }

  try {
    if (count_cmd->parsed()) return do_count(o, out);
    if (series_cmd->parsed()) return do_series(o, out);
    if (gf_cmd->parsed()) return do_gf(o, out);
    if (verify_cmd->parsed()) return do_verify(o, out);
    if (oracle_cmd->parsed()) return do_oracle(o, out);
    if (bij_cmd->parsed()) return do_bijection(o, out);
    if (export_cmd->parsed()) return do_export(o, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace indsets::cli
