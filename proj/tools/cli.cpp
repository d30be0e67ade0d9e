#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tangle/antichain.hpp"
#include "tangle/error.hpp"
#include "tangle/layout.hpp"
#include "tangle/render.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle::cli {

namespace {

using nlohmann::json;

// A tanglegram argument is a file path, "-" for stdin, or one inline line.
std::vector<Tanglegram> load_tanglegrams(const std::string& arg) {
  std::vector<std::string> lines;
  auto slurp = [&](std::istream& in) {
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  };
  if (arg == "-") {
    slurp(std::cin);
  } else if (std::error_code ec; std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot open '" + arg + "'");
    slurp(in);
  } else {
    lines.push_back(arg);
  }
  std::vector<Tanglegram> out;
  for (const auto& line : lines) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(Tanglegram::parse(line));
  }
  if (out.empty()) throw InvalidArgument("no tanglegram found in '" + arg + "'");
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

std::string join_edges(const std::vector<Edge>& edges) {
  std::string s;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k) s += ',';
    s += edges[k].left + ':' + edges[k].right;
  }
  return s;
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Options {
  // gen
  std::string family;
  int index = 0;
  // verify
  std::string verify_kind;
  int max = 0;
  bool adjacent_only = false;
  double timeout_s = 0.0;
  unsigned threads = 0;
  bool no_timing = false;
  std::string format = "text";
  // planar / crossing-number / layout
  std::string file;
  std::string method = "kuratowski";
  int cap = kDefaultSizeCap;
  std::string emit = "text";
  int rho_index = 0;
  // pattern
  std::string pi_text;
  std::string rho_text;
  // induced
  std::string sub;
  std::string host;
  // census
  int census_size = 0;
};

int run_gen(const Options& o, std::ostream& out) {
  const Permutation p = o.family == "rho" ? rho(o.index) : pi_seq(o.index);
  out << p.to_string() << '\n';
  return kSuccess;
}

int run_verify_antichain(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.filter = o.adjacent_only ? PairFilter::kAdjacentOnly : PairFilter::kAllPairs;
  if (o.timeout_s > 0) {
    vo.per_pair_timeout = std::chrono::milliseconds(static_cast<long long>(o.timeout_s * 1000.0));
  }
  vo.threads = o.threads;
  const auto report = verify_antichain(o.max, vo);
  for (const auto& r : report.records) {
    if (o.format == "jsonl") {
      json rec = {{"i", r.i}, {"j", r.j}, {"sigma", to_string(r.sigma_tag)}, {"result", to_string(r.result)},
                  {"witness", r.witness}};
      if (!o.no_timing) rec["elapsed_ms"] = std::stod(ms(r.elapsed_ms));
      out << rec.dump() << '\n';
    } else {
      out << "pair i=" << r.i << " j=" << r.j << " sigma=" << to_string(r.sigma_tag)
          << " result=" << to_string(r.result);
      if (!r.witness.empty()) out << " witness=" << join_ints(r.witness);
      if (!o.no_timing) out << " elapsed_ms=" << ms(r.elapsed_ms);
      out << '\n';
    }
  }
  const char* verdict = report.pass ? "PASS" : "FAIL";
  if (o.format == "jsonl") {
    out << json{{"summary", verdict}, {"checks", report.records.size()}}.dump() << '\n';
  } else {
    out << verdict << " antichain max=" << o.max << (o.adjacent_only ? " adjacent-only" : " all-pairs")
        << " checks=" << report.records.size() << '\n';
  }
  return report.pass ? kSuccess : kFalse;
}

int run_verify_chain(const Options& o, std::ostream& out) {
  const auto report = verify_chain(o.max);
  for (const auto& s : report.steps) {
    if (o.format == "jsonl") {
      json rec = {{"i", s.i}, {"restrict_identity", s.restrict_identity}, {"induced", s.induced}};
      if (!o.no_timing) rec["elapsed_ms"] = std::stod(ms(s.elapsed_ms));
      out << rec.dump() << '\n';
    } else {
      out << "step i=" << s.i << " restrict_identity=" << (s.restrict_identity ? "ok" : "fail")
          << " induced=" << (s.induced ? "ok" : "fail");
      if (!o.no_timing) out << " elapsed_ms=" << ms(s.elapsed_ms);
      out << '\n';
    }
  }
  const char* verdict = report.pass ? "PASS" : "FAIL";
  if (o.format == "jsonl") {
    out << json{{"summary", verdict}, {"steps", report.steps.size()}}.dump() << '\n';
  } else {
    out << verdict << " chain max=" << o.max << " steps=" << report.steps.size() << '\n';
  }
  return report.pass ? kSuccess : kFalse;
}

int run_planar(const Options& o, std::ostream& out) {
  const auto method = o.method == "oracle" ? PlanarityMethod::kOracle : PlanarityMethod::kKuratowski;
  bool all = true;
  for (const auto& t : load_tanglegrams(o.file)) {
    if (method == PlanarityMethod::kKuratowski) {
      auto witness = find_excluded(t);
      all = all && !witness;
      out << (witness ? "false witness=" + join_edges(*witness) : std::string("true")) << '\n';
    } else {
      const bool planar = is_planar(t, method, o.cap);
      all = all && planar;
      out << (planar ? "true" : "false") << '\n';
    }
  }
  return all ? kSuccess : kFalse;
}

int run_crossing_number(const Options& o, std::ostream& out) {
  for (const auto& t : load_tanglegrams(o.file)) out << crossing_number(t, o.cap) << '\n';
  return kSuccess;
}

int run_layout(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<Layout> layout;
  if (o.rho_index != 0) {
    layout = rho_layout(o.rho_index);
  } else {
    if (o.file.empty()) throw InvalidArgument("layout needs a tanglegram file or --rho <i>");
    auto ts = load_tanglegrams(o.file);
    if (ts.size() != 1) throw InvalidArgument("layout takes exactly one tanglegram");
    layout = planar_layout(ts.front(), o.cap);
    if (!layout) {
      err << "tanglegram is not planar; emitting a crossing-minimal layout\n";
      auto best = minimum_layout(ts.front(), o.cap);
      layout = layout_from_masks(ts.front(), best.left_mask, best.right_mask);
    }
  }
  if (o.emit == "svg") out << to_svg(*layout);
  else if (o.emit == "tikz") out << to_tikz(*layout);
  else out << to_text(*layout);
  return kSuccess;
}

int run_pattern(const Options& o, std::ostream& out) {
  // Only relative order matters, so any distinct values are accepted.
  const auto pi = Permutation::parse_pattern(o.pi_text);
  const auto pattern = Permutation::parse_pattern(o.rho_text);
  auto witness = contains_pattern(pi, pattern);
  if (!witness) {
    out << "none\n";
    return kFalse;
  }
  out << '{' << join_ints(*witness) << "}\n";
  return kSuccess;
}

int run_induced(const Options& o, std::ostream& out) {
  auto subs = load_tanglegrams(o.sub);
  auto hosts = load_tanglegrams(o.host);
  if (subs.size() != 1 || hosts.size() != 1) throw InvalidArgument("induced takes one --sub and one --host tanglegram");
  const bool yes = is_induced_sub(subs.front(), hosts.front());
  out << (yes ? "true" : "false") << '\n';
  return yes ? kSuccess : kFalse;
}

int run_census(const Options& o, std::ostream& out) {
  if (o.census_size < 1) throw InvalidArgument("census needs --size >= 1");
  if (o.census_size > 5) throw BudgetExceeded("census is limited to sizes <= 5");
  const auto c = census(o.census_size);
  out << "size " << c.size << '\n' << "total " << c.total << '\n';
  for (const auto& [k, count] : c.by_crossing_number) out << "crossing_number " << k << ' ' << count << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tanglegrams, catergrams and the induced subtanglegram order", "tanglegram"};
  app.require_subcommand(1, 1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Print rho_i or pi_i in one-line notation");
  gen->add_option("family", o.family, "rho or pi")->required()->check(CLI::IsMember({"rho", "pi"}));
  gen->add_option("i", o.index, "Family index (>= 1)")->required();

  auto* verify = app.add_subcommand("verify", "Finite-prefix antichain / chain verification");
  verify->add_option("kind", o.verify_kind, "antichain or chain")->required()->check(CLI::IsMember({"antichain", "chain"}));
  verify->add_option("--max", o.max, "Largest family index K (>= 2)")->required();
  verify->add_flag("--adjacent-only", o.adjacent_only, "Only check pairs (i, i+1)");
  verify->add_option("--timeout", o.timeout_s, "Per-check timeout in seconds (antichain)");
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--no-timing", o.no_timing, "Omit elapsed times from records");
  verify->add_option("--format", o.format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));

  auto* planar = app.add_subcommand("planar", "Decide planarity of each tanglegram");
  planar->add_option("file", o.file, "Tanglegram file, '-' or an inline tanglegram")->required();
  planar->add_option("--method", o.method, "kuratowski or oracle")->check(CLI::IsMember({"kuratowski", "oracle"}));
  planar->add_option("--cap", o.cap, "Size cap for the oracle sweep");

  auto* crossing = app.add_subcommand("crossing-number", "Exhaustive tangle crossing number");
  crossing->add_option("file", o.file, "Tanglegram file, '-' or an inline tanglegram")->required();
  crossing->add_option("--cap", o.cap, "Size cap for the sweep");

  auto* layout = app.add_subcommand("layout", "Emit a planar (or crossing-minimal) layout");
  layout->add_option("file", o.file, "Tanglegram file, '-' or an inline tanglegram");
  layout->add_option("--rho", o.rho_index, "Use the closed-form planar layout of T_rho_i");
  layout->add_option("--emit", o.emit, "svg, tikz or text")->check(CLI::IsMember({"svg", "tikz", "text"}));
  layout->add_option("--cap", o.cap, "Size cap for the sweep");

  auto* pattern = app.add_subcommand("pattern", "Permutation pattern containment");
  pattern->add_option("--pi", o.pi_text, "Text permutation, e.g. (2,3,5,1)")->required();
  pattern->add_option("--rho", o.rho_text, "Pattern permutation")->required();

  auto* induced = app.add_subcommand("induced", "Induced subtanglegram test");
  induced->add_option("--sub", o.sub, "Candidate subtanglegram (file or inline)")->required();
  induced->add_option("--host", o.host, "Host tanglegram (file or inline)")->required();

  auto* census_cmd = app.add_subcommand("census", "Count tanglegrams of a size by crossing number");
  census_cmd->add_option("--size", o.census_size, "Size n (1..5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*gen) return run_gen(o, out);
    if (*verify) return o.verify_kind == "antichain" ? run_verify_antichain(o, out) : run_verify_chain(o, out);
    if (*planar) return run_planar(o, out);
    if (*crossing) return run_crossing_number(o, out);
    if (*layout) return run_layout(o, out, err);
    if (*pattern) return run_pattern(o, out);
    if (*induced) return run_induced(o, out);
    if (*census_cmd) return run_census(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace tangle::cli
