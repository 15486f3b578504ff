#pragma once

// Command-line front end. run_cli() takes explicit streams so tests can
// drive it in-process; tools/main.cpp only forwards to it.
//
// Exit codes: 0 ok, 1 usage, 2 unsupported n, 3 decode/validation failure,
// 4 fixture mismatch, 5 survey stopped by --stop-after.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fullerene.hpp"
#include "fullerene/reference_tables.hpp"

namespace fullerene::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kUnsupported = 2,
  kDecode = 3,
  kFixtureMismatch = 4,
  kStopped = 5,
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

inline Range parse_range(const std::string& text) {
  auto to_n = [&](const std::string& s) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad n-range \"" + text + "\"");
    return static_cast<std::size_t>(v);
  };
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const auto n = to_n(text);
      return {n, n};
    }
    Range r{to_n(text.substr(0, dots)), to_n(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty n-range \"" + text + "\"");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad n-range \"" + text + "\" (expected a..b)");
  }
}

// "r,s" tokens; several may be given in one argument separated by ';' or ' '.
inline std::vector<RsPair> parse_pairs(const std::vector<std::string>& args, std::ostream& err) {
  std::vector<RsPair> out;
  for (const auto& arg : args) {
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ';')) {
      std::istringstream words(token);
      std::string word;
      while (words >> word) {
        unsigned r = 0, s = 0;
        char sep = 0;
        std::istringstream w(word);
        if (!(w >> r >> sep >> s) || (sep != ',' && sep != ':') || !w.eof())
          throw std::invalid_argument("bad (r,s) pair \"" + word + "\" (expected r,s)");
        RsPair p{r, s};
        p.validate();
        if (s > 3) err << "warning: s = " << s << " is outside the tested range s <= 3\n";
        out.push_back(p);
      }
    }
  }
  if (out.empty()) return default_rs_pairs();
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// --- generate ----------------------------------------------------------------

struct GenerateArgs {
  std::size_t n = 0;
  bool ipr = false;
  std::string format = "planar_code";
  std::string output = "-";
  std::string partition;
  bool list_partitions = false;
};

inline int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  const SpiralSearch search(a.n, a.ipr);
  if (a.list_partitions) {
    for (const auto& p : search.partitions()) out << p << '\n';
    return kOk;
  }
  std::ofstream file;
  if (a.output != "-") {
    file.open(a.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << a.output << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = a.output == "-" ? out : file;
  std::size_t count = 0;
  if (a.format == "spiral") {
    auto emit = [&](GeneratedFullerene&& g) {
      sink << format_spiral(g.spiral.spiral) << '\n';
      ++count;
    };
    a.partition.empty() ? search.run_all(emit) : search.run(a.partition, emit);
  } else {
    PlanarCodeWriter writer(sink);
    auto emit = [&](GeneratedFullerene&& g) {
      writer.write(g.graph);
      ++count;
    };
    a.partition.empty() ? search.run_all(emit) : search.run(a.partition, emit);
  }
  sink.flush();
  err << "generated " << count << (a.ipr ? " IPR" : "") << " isomer(s) with n = " << a.n << '\n';
  return kOk;
}

// --- analyze -----------------------------------------------------------------

struct AnalyzeArgs {
  std::string input = "-";
  std::vector<std::string> pairs;
  bool pretty = false;
};

inline nlohmann::ordered_json analyze_graph(const FullereneGraph& g, std::size_t record,
                                            const std::vector<RsPair>& pairs) {
  const auto d = all_pairs_distances(g);
  const auto report = index_report(d);
  nlohmann::ordered_json j;
  j["record"] = record;
  j["n"] = g.vertex_count();
  j["ipr"] = is_ipr(g);
  j["W"] = report.wiener;
  j["WW"] = to_string(report.hyper_wiener);
  j["TSZ"] = to_string(report.tsz);
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  nlohmann::ordered_json irr = nlohmann::ordered_json::object();
  for (const auto& p : pairs) {
    const auto k = complexity(d, p.r, p.s);
    c[to_string(p)] = k;
    irr[to_string(p)] = k == g.vertex_count();
  }
  j["complexity"] = c;
  j["irregular"] = irr;
  return j;
}

inline void print_pretty_analysis(const nlohmann::ordered_json& j, const std::vector<RsPair>& pairs,
                                  std::ostream& out) {
  out << "graph " << j["record"].get<std::size_t>() << ": n = " << j["n"].get<std::size_t>()
      << (j["ipr"].get<bool>() ? " (IPR)" : "") << "\n  W = " << j["W"].get<std::uint64_t>()
      << "  WW = " << j["WW"].get<std::string>() << "  TSZ = " << j["TSZ"].get<std::string>()
      << '\n';
  out << "  " << std::left << std::setw(8) << "(r,s)" << std::setw(12) << "complexity"
      << "irregular\n";
  for (const auto& p : pairs) {
    const auto key = to_string(p);
    out << "  " << std::setw(8) << key << std::setw(12) << j["complexity"][key].get<std::size_t>()
        << (j["irregular"][key].get<bool>() ? "yes" : "no") << '\n';
  }
  out << std::right;
}

inline int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  const auto pairs = parse_pairs(a.pairs, err);
  std::ifstream file;
  if (a.input != "-") {
    file.open(a.input, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << a.input << '\n';
      return kDecode;
    }
  }
  std::istream& src = a.input == "-" ? in : file;

  auto emit = [&](const FullereneGraph& g, std::size_t record) {
    const auto j = analyze_graph(g, record, pairs);
    if (a.pretty)
      print_pretty_analysis(j, pairs, out);
    else
      out << j.dump() << '\n';
    out.flush();
  };

  // Sniff the header: planar_code streams start with ">>planar_code<<",
  // anything else is read as spiral text.
  std::string head(kPlanarCodeHeader.size(), '\0');
  src.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(src.gcount()));
  std::string rest((std::istreambuf_iterator<char>(src)), std::istreambuf_iterator<char>());
  std::istringstream stream(head + rest);

  if (head == kPlanarCodeHeader) {
    try {
      PlanarCodeReader reader(stream);
      while (auto g = reader.next()) emit(*g, reader.records_read() - 1);
    } catch (const CodecError& e) {
      err << "error: " << e.what() << '\n';
      return kDecode;
    }
    return kOk;
  }

  std::string line;
  std::size_t record = 0;
  while (std::getline(stream, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      const auto spiral = parse_spiral(line);
      const auto g = wind_up(spiral, record);
      if (!g) throw SpiralError(SpiralErrc::NoSpiralFound, "spiral does not wind up");
      emit(*g, record);
    } catch (const SpiralError& e) {
      err << "error: record " << record << ": " << e.what() << '\n';
      return kDecode;
    }
    ++record;
  }
  return kOk;
}

// --- survey ------------------------------------------------------------------

struct SurveyArgs {
  std::string range;
  bool ipr = false;
  std::vector<std::string> pairs;
  std::string output;
  std::string checkpoint;
  unsigned workers = default_workers();
  std::size_t reps = 10;
  std::uint64_t sample_rate = 1000;
  bool timings = false;
  bool pretty = false;
  std::optional<std::size_t> stop_after;
};

inline void print_row(const SurveyRow& row, std::ostream& out) {
  for (const auto& [pair, st] : row.stats)
    out << "n=" << row.n << " ipr=" << (row.ipr ? 1 : 0) << " rs=" << pair.r << ',' << pair.s
        << " isomers=" << row.isomer_count << " C=" << st.c_max << " N=" << st.count
        << (row.irregular(pair) ? " irregular" : "") << '\n';
  out.flush();
}

inline void print_pretty_rows(const std::vector<SurveyRow>& rows, std::ostream& out) {
  if (rows.empty()) return;
  out << std::setw(5) << "n" << std::setw(10) << "isomers";
  for (const auto& [pair, st] : rows.front().stats) out << std::setw(12) << to_string(pair);
  out << '\n';
  for (const auto& row : rows) {
    out << std::setw(5) << row.n << std::setw(10) << row.isomer_count;
    for (const auto& [pair, st] : row.stats) {
      std::string cell = std::to_string(st.c_max) + "/" + std::to_string(st.count);
      if (row.irregular(pair)) cell += '*';
      out << std::setw(12) << cell;
    }
    out << '\n';
  }
  out << "(C/N; * marks C = n)\n";
}

inline int cmd_survey(const SurveyArgs& a, std::ostream& out, std::ostream& err) {
  const auto range = parse_range(a.range);
  const auto pairs = parse_pairs(a.pairs, err);

  SurveyOptions opt;
  opt.workers = a.workers;
  opt.representative_cap = a.reps;
  opt.assertion_sample = a.sample_rate;
  opt.record_timing = a.timings;
  opt.stop_after_partitions = a.stop_after;
  if (!a.checkpoint.empty()) {
    opt.checkpoint = a.checkpoint;
  } else if (const char* dir = std::getenv("FULLERENE_CHECKPOINT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    opt.checkpoint = std::filesystem::path(dir) / "survey-checkpoint.json";
  }

  std::vector<SurveyRow> rows;
  for (std::size_t n = range.lo; n <= range.hi; ++n) {
    if (n % 2) continue;  // odd n are skipped silently
    if (range.lo == range.hi)
      check_generation_n(n);
    else if (!is_fullerene_vertex_count(n))
      continue;  // n = 22 inside a range
    else
      check_generation_n(n);
    if (a.ipr && n < 60) continue;  // no IPR isomers below 60; n = 60 is the first row
    if (opt.stop_after_partitions) {
      // The budget is shared by the whole range.
      try {
        rows.push_back(survey_row(n, a.ipr, pairs, opt));
      } catch (const SurveyError& e) {
        if (e.code() != SurveyErrc::Interrupted) throw;
        if (!a.output.empty() && !rows.empty()) emit_results(rows, a.output);
        err << "stopped: " << e.what() << '\n';
        return kStopped;
      }
      *opt.stop_after_partitions -= rows.back().partitions_scanned;
    } else {
      rows.push_back(survey_row(n, a.ipr, pairs, opt));
    }
    if (!a.pretty) print_row(rows.back(), out);
  }

  if (a.pretty) print_pretty_rows(rows, out);
  if (!a.output.empty()) {
    emit_results(rows, a.output);
  } else if (!a.pretty) {
    for (const auto& row : rows)
      for (const auto& rec : records_from_row(row)) out << rec.to_line() << '\n';
  }
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string results;
  bool pretty = false;
};

struct FixtureMismatch {
  std::size_t n;
  bool ipr;
  RsPair pair;
  reference::ReferenceCell expected;
  std::size_t c_max;
  std::uint64_t count;
};

inline std::vector<FixtureMismatch> compare_with_reference(const std::vector<SurveyRow>& rows,
                                                           std::size_t* compared = nullptr) {
  std::vector<FixtureMismatch> out;
  const auto columns = default_rs_pairs();
  std::size_t cells = 0;
  for (const auto& row : rows) {
    const auto ref = reference::find(row.n, row.ipr);
    if (!ref) continue;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      auto it = row.stats.find(columns[c]);
      if (it == row.stats.end()) continue;
      ++cells;
      const auto& exp = ref->cells[c];
      if (it->second.c_max != exp.c_max || it->second.count != exp.count)
        out.push_back({row.n, row.ipr, columns[c], exp, it->second.c_max, it->second.count});
    }
  }
  if (compared) *compared = cells;
  return out;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<SurveyRow> rows;
  try {
    rows = rows_from_records(read_results(a.results));
  } catch (const SurveyError& e) {
    err << "error: " << e.what() << '\n';
    return kDecode;
  } catch (const SpiralError& e) {
    err << "error: " << e.what() << '\n';
    return kDecode;
  }

  // A refuted clause is reported but is not a failure by itself: the
  // published tables contradict one clause (IPR (2,3) at n = 112).
  for (const auto& res : verify_propositions(rows)) {
    out << "clause \"" << res.clause.name << "\" " << to_string(res.status);
    out << " scanned_to=" << res.scanned_to << " witnesses=";
    for (std::size_t i = 0; i < res.witnesses.size(); ++i)
      out << (i ? "," : "") << res.witnesses[i];
    if (!res.detail.empty()) out << " (" << res.detail << ")";
    out << '\n';
  }
  for (bool ipr : {false, true})
    for (const auto& pair : default_rs_pairs()) {
      const auto f = frontier_from_rows(rows, pair, ipr);
      if (f.scanned_to == 0) continue;
      out << "frontier " << (ipr ? "ipr" : "general") << " rs=" << pair.r << ',' << pair.s
          << " scanned_to=" << f.scanned_to << " minimal_n=";
      if (f.minimal_n)
        out << *f.minimal_n << " N=" << f.attaining;
      else
        out << "none";
      out << '\n';
    }

  std::size_t compared = 0;
  const auto mismatches = compare_with_reference(rows, &compared);
  for (const auto& m : mismatches)
    out << "fixture MISMATCH n=" << m.n << " ipr=" << (m.ipr ? 1 : 0) << " rs=" << m.pair.r << ','
        << m.pair.s << " expected C=" << m.expected.c_max << " N=" << m.expected.count
        << " got C=" << m.c_max << " N=" << m.count << '\n';
  out << "fixtures compared=" << compared << " mismatched=" << mismatches.size() << '\n';
  if (a.pretty) print_pretty_rows(rows, out);
  return mismatches.empty() ? kOk : kFixtureMismatch;
}

// --- entry point ---------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Fullerene isomer generation and Wiener (r,s)-complexity surveys"};
  app.set_version_flag("--version", kToolkitVersion);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate all isomers with n vertices");
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_flag("--ipr", gen.ipr, "Isolated-pentagon isomers only");
  generate->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"planar_code", "spiral"}));
  generate->add_option("--output,-o", gen.output, "Output path, '-' for stdout");
  generate->add_option("--partition", gen.partition, "Run one partition (see --list-partitions)");
  generate->add_flag("--list-partitions", gen.list_partitions, "Print the partition prefixes");

  AnalyzeArgs ana;
  auto* analyze = app.add_subcommand("analyze", "Distance indices of each graph in a stream");
  analyze->add_option("--input,-i", ana.input, "planar_code or spiral text, '-' for stdin");
  analyze->add_option("--pairs", ana.pairs, "Exponent ranges as r,s (default: the six standard)");
  analyze->add_flag("--pretty", ana.pretty, "Human-readable output");

  SurveyArgs sur;
  auto* survey = app.add_subcommand("survey", "Maximal (r,s)-complexity per n");
  survey->add_option("--n", sur.range, "Vertex count or inclusive range a..b")->required();
  survey->add_flag("--ipr", sur.ipr, "Isolated-pentagon isomers only");
  survey->add_option("--pairs", sur.pairs, "Exponent ranges as r,s (default: the six standard)");
  survey->add_option("--output,-o", sur.output, "Results file (JSON lines), merged if present");
  survey->add_option("--checkpoint", sur.checkpoint,
                     "Checkpoint file (default: $FULLERENE_CHECKPOINT_DIR/survey-checkpoint.json)");
  survey->add_option("--workers,-j", sur.workers, "Worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--reps", sur.reps, "Representatives kept per (r,s)");
  survey->add_option("--sample-rate", sur.sample_rate,
                     "Check transmission identities on one graph in this many (0: off)");
  survey->add_flag("--timings", sur.timings, "Record runtime_ms (otherwise written as 0)");
  survey->add_flag("--pretty", sur.pretty, "Print a table instead of per-row lines");
  survey->add_option("--stop-after", sur.stop_after,
                     "Stop after scanning this many partitions (exit 5)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a results file against known values");
  verify->add_option("--results", ver.results, "Results file")->required();
  verify->add_flag("--pretty", ver.pretty, "Also print the rows as a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolkitVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*analyze) return cmd_analyze(ana, in, out, err);
    if (*survey) return cmd_survey(sur, out, err);
    if (*verify) return cmd_verify(ver, out, err);
  } catch (const SpiralError& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == SpiralErrc::UnsupportedN ? kUnsupported : kUsage;
  } catch (const MetricsError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SurveyError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fullerene::cli
