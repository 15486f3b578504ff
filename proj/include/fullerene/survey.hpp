#pragma once

// Exhaustive per-n surveys of Wiener (r,s)-complexity: for every exponent
// range, the maximal complexity C over all isomers, the number N of isomers
// attaining it, and the least canonical spirals among them. Work is split
// by generator partition; partial states merge associatively, which gives
// worker-count independent results and checkpoint/resume.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fullerene/codec.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/metrics.hpp"
#include "fullerene/spiral.hpp"
#include "fullerene/version.hpp"

namespace fullerene {

enum class SurveyErrc { SinkUnavailable, BadRecord, Conflict, BadCheckpoint, Interrupted, NoPairs };

inline const char* to_string(SurveyErrc e) {
  switch (e) {
    case SurveyErrc::SinkUnavailable: return "SinkUnavailable";
    case SurveyErrc::BadRecord: return "BadRecord";
    case SurveyErrc::Conflict: return "Conflict";
    case SurveyErrc::BadCheckpoint: return "BadCheckpoint";
    case SurveyErrc::Interrupted: return "Interrupted";
    case SurveyErrc::NoPairs: return "NoPairs";
  }
  return "SurveyError";
}

class SurveyError : public std::runtime_error {
 public:
  SurveyError(SurveyErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  SurveyErrc code() const noexcept { return code_; }

 private:
  SurveyErrc code_;
};

/// Running (max, count, least representatives) for one exponent range.
struct PairStat {
  std::size_t c_max = 0;
  std::uint64_t count = 0;
  std::vector<SpiralSequence> representatives;  // sorted, at most the cap

  void observe(std::size_t c, const SpiralSequence& spiral, std::size_t cap) {
    if (c > c_max) {
      c_max = c;
      count = 0;
      representatives.clear();
    }
    if (c == c_max) {
      ++count;
      add_representative(spiral, cap);
    }
  }

  void merge(const PairStat& other, std::size_t cap) {
    if (other.count == 0) return;
    if (other.c_max > c_max || count == 0) {
      c_max = other.c_max;
      count = 0;
      representatives.clear();
    }
    if (other.c_max == c_max) {
      count += other.count;
      for (const auto& r : other.representatives) add_representative(r, cap);
    }
  }

  friend bool operator==(const PairStat&, const PairStat&) = default;

 private:
  void add_representative(const SpiralSequence& s, std::size_t cap) {
    auto it = std::ranges::lower_bound(representatives, s);
    if (it != representatives.end() && *it == s) return;
    representatives.insert(it, s);
    if (representatives.size() > cap) representatives.pop_back();
  }
};

/// Survey state for any subset of a row's partitions.
struct PartialSurvey {
  std::uint64_t isomers = 0;
  std::map<RsPair, PairStat> stats;

  void merge(const PartialSurvey& other, std::size_t cap) {
    isomers += other.isomers;
    for (const auto& [pair, stat] : other.stats) stats[pair].merge(stat, cap);
  }

  friend bool operator==(const PartialSurvey&, const PartialSurvey&) = default;
};

struct SurveyRow {
  std::size_t n = 0;
  bool ipr = false;
  std::uint64_t isomer_count = 0;
  std::map<RsPair, PairStat> stats;
  std::uint64_t runtime_ms = 0;
  std::size_t partitions_scanned = 0;  // not restored from a checkpoint

  const PairStat& stat(const RsPair& p) const { return stats.at(p); }
  bool irregular(const RsPair& p) const {
    auto it = stats.find(p);
    return it != stats.end() && it->second.count > 0 && it->second.c_max == n;
  }

  friend bool operator==(const SurveyRow& a, const SurveyRow& b) {
    return a.n == b.n && a.ipr == b.ipr && a.isomer_count == b.isomer_count &&
           a.stats == b.stats;
  }
};

struct SurveyOptions {
  unsigned workers = 1;
  std::size_t representative_cap = 10;
  /// Check the transmission identities on one graph in this many (0: never).
  std::uint64_t assertion_sample = 1000;
  /// Checkpoint file; completed partitions found there are not rescanned.
  std::optional<std::filesystem::path> checkpoint;
  /// Stop with SurveyErrc::Interrupted after this many newly scanned
  /// partitions (used to exercise resume).
  std::optional<std::size_t> stop_after_partitions;
  bool record_timing = false;
};

inline std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - since)
                                        .count());
}

// --- checkpoint ------------------------------------------------------------
//
// JSON document:
//   {"format": "fullerene-survey-checkpoint", "version": 1,
//    "rows": {"<row key>": {"<partition prefix>": <partial>, ...}, ...}}
// with row key "n=<n>;ipr=<0|1>;pairs=<r>-<s>,...;cap=<cap>" and
//   <partial> = {"isomers": k, "stats": [{"r","s","c_max","count","reps": [...]}]}.

namespace detail {

inline nlohmann::json partial_to_json(const PartialSurvey& p) {
  nlohmann::json stats = nlohmann::json::array();
  for (const auto& [pair, st] : p.stats) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& s : st.representatives) reps.push_back(format_spiral(s));
    stats.push_back({{"r", pair.r}, {"s", pair.s}, {"c_max", st.c_max}, {"count", st.count},
                     {"reps", reps}});
  }
  return {{"isomers", p.isomers}, {"stats", stats}};
}

inline PartialSurvey partial_from_json(const nlohmann::json& j) {
  PartialSurvey p;
  p.isomers = j.at("isomers").get<std::uint64_t>();
  for (const auto& e : j.at("stats")) {
    PairStat st;
    st.c_max = e.at("c_max").get<std::size_t>();
    st.count = e.at("count").get<std::uint64_t>();
    for (const auto& r : e.at("reps")) st.representatives.push_back(parse_spiral(r.get<std::string>()));
    p.stats[RsPair{e.at("r").get<unsigned>(), e.at("s").get<unsigned>()}] = std::move(st);
  }
  return p;
}

inline std::string row_key(std::size_t n, bool ipr, const std::vector<RsPair>& pairs,
                           std::size_t cap) {
  std::string key = "n=" + std::to_string(n) + ";ipr=" + (ipr ? "1" : "0") + ";pairs=";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(pairs[i].r) + "-" + std::to_string(pairs[i].s);
  }
  return key + ";cap=" + std::to_string(cap);
}

inline void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SurveyError(SurveyErrc::SinkUnavailable, "cannot write " + tmp.string());
    out << content;
    if (!out) throw SurveyError(SurveyErrc::SinkUnavailable, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw SurveyError(SurveyErrc::SinkUnavailable, "cannot replace " + path.string());
}

}  // namespace detail

class Checkpoint {
 public:
  explicit Checkpoint(std::filesystem::path path) : path_(std::move(path)) {
    doc_ = {{"format", "fullerene-survey-checkpoint"}, {"version", 1},
            {"rows", nlohmann::json::object()}};
    std::ifstream in(path_);
    if (!in) return;
    try {
      auto j = nlohmann::json::parse(in);
      if (j.value("format", "") != "fullerene-survey-checkpoint" || j.value("version", 0) != 1)
        throw SurveyError(SurveyErrc::BadCheckpoint, path_.string());
      doc_ = std::move(j);
    } catch (const nlohmann::json::exception& e) {
      throw SurveyError(SurveyErrc::BadCheckpoint, path_.string() + ": " + e.what());
    }
  }

  std::optional<PartialSurvey> find(const std::string& row, const std::string& partition) const {
    const auto& rows = doc_.at("rows");
    auto r = rows.find(row);
    if (r == rows.end()) return std::nullopt;
    auto p = r->find(partition);
    if (p == r->end()) return std::nullopt;
    return detail::partial_from_json(*p);
  }

  void record(const std::string& row, const std::string& partition, const PartialSurvey& state) {
    doc_["rows"][row][partition] = detail::partial_to_json(state);
    detail::write_file_atomically(path_, doc_.dump() + "\n");
  }

 private:
  std::filesystem::path path_;
  nlohmann::json doc_;
};

// --- per-graph evaluation ----------------------------------------------------

namespace detail {

inline unsigned max_exponent(const std::vector<RsPair>& pairs) {
  unsigned k = 1;
  for (const auto& p : pairs) k = std::max(k, p.s);
  return k;
}

// Cross-checks the moment-table route against the direct definitions.
inline void check_identities(const FullereneGraph& g, const DistanceMatrix& d,
                             const MomentTable& table, const std::vector<RsPair>& pairs) {
  const std::size_t n = d.size();
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t tr = table.moment(v, 1);
    if (tr < n - 1 || tr > n * (n - 1) / 2)
      throw std::logic_error("transmission outside [n-1, n(n-1)/2]");
  }
  for (const auto& p : pairs) {
    std::uint64_t sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const auto direct = transmission(d, static_cast<Vertex>(v), p.r, p.s);
      std::uint64_t by_moments = 0;
      for (unsigned i = p.r; i <= p.s; ++i)
        by_moments += transmission(d, static_cast<Vertex>(v), i, i);
      if (direct != by_moments || direct != table.transmission(v, p))
        throw std::logic_error("moment additivity violated for " + to_string(p));
      sum += direct;
    }
    if (sum != 2 * wiener_rs(d, p.r, p.s))
      throw std::logic_error("sum of transmissions != 2 W for " + to_string(p) + " at graph " +
                             std::to_string(g.id()));
  }
}

inline PartialSurvey scan_partition(const SpiralSearch& search, const std::string& prefix,
                                    const std::vector<RsPair>& pairs, const SurveyOptions& opt) {
  PartialSurvey part;
  for (const auto& p : pairs) part.stats[p];
  const unsigned kmax = max_exponent(pairs);
  search.run(prefix, [&](GeneratedFullerene&& g) {
    const auto d = all_pairs_distances(g.graph);
    const MomentTable table(d, kmax);
    if (opt.assertion_sample && part.isomers % opt.assertion_sample == 0)
      check_identities(g.graph, d, table, pairs);
    for (const auto& p : pairs)
      part.stats[p].observe(table.complexity(p), g.spiral.spiral, opt.representative_cap);
    ++part.isomers;
  });
  return part;
}

}  // namespace detail

/// Maximal Wiener (r,s)-complexity and attaining-isomer counts at one n.
inline SurveyRow survey_row(std::size_t n, bool ipr, std::vector<RsPair> pairs = default_rs_pairs(),
                            const SurveyOptions& opt = {}) {
  if (pairs.empty()) throw SurveyError(SurveyErrc::NoPairs, "no exponent ranges requested");
  for (const auto& p : pairs) p.validate();
  const auto started = std::chrono::steady_clock::now();
  const SpiralSearch search(n, ipr);
  const auto partitions = search.partitions();
  const std::string key = detail::row_key(n, ipr, pairs, opt.representative_cap);

  std::optional<Checkpoint> checkpoint;
  if (opt.checkpoint) checkpoint.emplace(*opt.checkpoint);

  std::vector<std::optional<PartialSurvey>> results(partitions.size());
  if (checkpoint)
    for (std::size_t i = 0; i < partitions.size(); ++i)
      results[i] = checkpoint->find(key, partitions[i]);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> scanned{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= partitions.size()) return;
      if (results[i]) continue;
      const std::size_t ticket = scanned.fetch_add(1);
      if (opt.stop_after_partitions && ticket >= *opt.stop_after_partitions) {
        scanned.fetch_sub(1);
        stop.store(true);
        return;
      }
      try {
        auto part = detail::scan_partition(search, partitions[i], pairs, opt);
        std::lock_guard lock(mutex);
        if (checkpoint) checkpoint->record(key, partitions[i], part);
        results[i] = std::move(part);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (stop.load())
    throw SurveyError(SurveyErrc::Interrupted,
                      "stopped after " + std::to_string(*opt.stop_after_partitions) +
                          " partitions at n = " + std::to_string(n));

  PartialSurvey total;
  for (const auto& p : pairs) total.stats[p];
  for (const auto& r : results) total.merge(*r, opt.representative_cap);

  SurveyRow row;
  row.n = n;
  row.ipr = ipr;
  row.isomer_count = total.isomers;
  row.stats = std::move(total.stats);
  row.runtime_ms = opt.record_timing ? elapsed_ms(started) : 0;
  row.partitions_scanned = scanned.load();
  return row;
}

/// Rows for every generable even n in [lo, hi] (n = 22 and odd n skipped).
inline std::vector<SurveyRow> survey_range(std::size_t lo, std::size_t hi, bool ipr,
                                           const std::vector<RsPair>& pairs = default_rs_pairs(),
                                           const SurveyOptions& opt = {}) {
  std::vector<SurveyRow> rows;
  for (std::size_t n = lo; n <= hi; ++n)
    if (is_fullerene_vertex_count(n) && n < kSpiralCompleteBelow)
      rows.push_back(survey_row(n, ipr, pairs, opt));
  return rows;
}

// --- irregularity frontier and proposition checks ---------------------------

struct FrontierEntry {
  RsPair pair;
  bool ipr = false;
  std::size_t scanned_to = 0;
  std::optional<std::size_t> minimal_n;  // smallest n with an irregular isomer
  std::uint64_t attaining = 0;           // irregular isomers at minimal_n
  std::vector<SpiralSequence> representatives;
};

/// Smallest n in already computed rows with C_max = n for the given range.
inline FrontierEntry frontier_from_rows(const std::vector<SurveyRow>& rows, const RsPair& pair,
                                        bool ipr) {
  FrontierEntry e;
  e.pair = pair;
  e.ipr = ipr;
  std::vector<const SurveyRow*> sorted;
  for (const auto& r : rows)
    if (r.ipr == ipr && r.stats.contains(pair)) sorted.push_back(&r);
  std::ranges::sort(sorted, {}, [](const SurveyRow* r) { return r->n; });
  for (const SurveyRow* r : sorted) {
    e.scanned_to = std::max(e.scanned_to, r->n);
    if (!e.minimal_n && r->irregular(pair)) {
      e.minimal_n = r->n;
      e.attaining = r->stat(pair).count;
      e.representatives = r->stat(pair).representatives;
    }
  }
  return e;
}

/// Scans n upwards until the first irregular (IPR) fullerene for `pair`.
inline FrontierEntry find_minimal_irregular(const RsPair& pair, bool ipr, std::size_t n_max,
                                            const SurveyOptions& opt = {}) {
  std::vector<SurveyRow> rows;
  for (std::size_t n = 20; n <= n_max && n < kSpiralCompleteBelow; n += 2) {
    if (!is_fullerene_vertex_count(n) || (ipr && n < 60)) continue;
    rows.push_back(survey_row(n, ipr, {pair}, opt));
    if (rows.back().irregular(pair)) break;
  }
  auto e = frontier_from_rows(rows, pair, ipr);
  if (!e.minimal_n) e.scanned_to = std::max(e.scanned_to, n_max);
  return e;
}

enum class ClauseStatus { Confirmed, Refuted, OutOfRange };

inline const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Confirmed: return "CONFIRMED";
    case ClauseStatus::Refuted: return "REFUTED";
    case ClauseStatus::OutOfRange: return "OUT_OF_RANGE";
  }
  return "?";
}

/// "Irregular isomers exist for n in `isolated` and for every n >= from,
/// and for no other n."
struct Clause {
  std::string name;
  bool ipr = false;
  RsPair pair;
  std::vector<std::size_t> isolated;
  std::optional<std::size_t> from;
};

struct ClauseResult {
  Clause clause;
  ClauseStatus status = ClauseStatus::OutOfRange;
  std::size_t scanned_to = 0;            // 0: nothing scanned
  std::vector<std::size_t> witnesses;    // scanned n with an irregular isomer
  std::string detail;
};

/// Existence thresholds for irregular fullerenes (first proposition) and
/// irregular IPR fullerenes (second proposition).
inline std::vector<Clause> proposition_clauses() {
  std::vector<Clause> c;
  c.push_back({"P1 (2,2) n=64 and n>=72", false, {2, 2}, {64}, 72});
  c.push_back({"P1 (1,2) n>=76", false, {1, 2}, {}, 76});
  for (unsigned r = 1; r <= 3; ++r)
    c.push_back({"P1 (" + std::to_string(r) + ",3) n>=62", false, {r, 3}, {}, 62});
  c.push_back({"P2 (2,2) n>=124", true, {2, 2}, {}, 124});
  c.push_back({"P2 (1,2) n>=130", true, {1, 2}, {}, 130});
  for (unsigned r = 1; r <= 3; ++r)
    c.push_back({"P2 (" + std::to_string(r) + ",3) n>=110", true, {r, 3}, {}, 110});
  return c;
}

/// Checks each clause against the contiguous block of rows starting at the
/// smallest n (20, or 60 for IPR rows).
inline ClauseResult evaluate_clause(const Clause& clause, const std::vector<SurveyRow>& rows) {
  ClauseResult res;
  res.clause = clause;
  std::map<std::size_t, const SurveyRow*> by_n;
  for (const auto& r : rows)
    if (r.ipr == clause.ipr && r.stats.contains(clause.pair)) by_n[r.n] = &r;
  const std::size_t base = clause.ipr ? 60 : 20;
  std::size_t n = base;
  std::vector<std::string> problems;
  while (by_n.contains(n)) {
    const SurveyRow& row = *by_n[n];
    const bool irregular = row.irregular(clause.pair);
    const bool listed = std::ranges::find(clause.isolated, n) != clause.isolated.end();
    const bool claimed = listed || (clause.from && n >= *clause.from);
    if (irregular) res.witnesses.push_back(n);
    if (claimed && !irregular)
      problems.push_back("n=" + std::to_string(n) + " has C=" +
                         std::to_string(row.stat(clause.pair).c_max));
    if (!claimed && irregular) problems.push_back("unexpected irregular n=" + std::to_string(n));
    res.scanned_to = n;
    n += (n == 20) ? 4 : 2;
  }
  std::size_t needed = clause.from.value_or(0);
  for (auto x : clause.isolated) needed = std::max(needed, x);
  if (!problems.empty()) {
    res.status = ClauseStatus::Refuted;
    for (const auto& p : problems) res.detail += (res.detail.empty() ? "" : "; ") + p;
  } else if (res.scanned_to >= needed) {
    res.status = ClauseStatus::Confirmed;
  } else {
    res.status = ClauseStatus::OutOfRange;
    res.detail = (res.scanned_to ? "scanned to n=" + std::to_string(res.scanned_to)
                                 : std::string("no rows scanned")) +
                 ", clause needs n=" + std::to_string(needed);
  }
  return res;
}

inline std::vector<ClauseResult> verify_propositions(const std::vector<SurveyRow>& rows) {
  std::vector<ClauseResult> out;
  for (const auto& c : proposition_clauses()) out.push_back(evaluate_clause(c, rows));
  return out;
}

// --- results file ------------------------------------------------------------
//
// UTF-8, one JSON object per line, one line per (n, ipr, r, s):
//   {"n","ipr","r","s","isomer_count","C_max","N","representatives",
//    "runtime_ms","toolkit_version","hash"}
// Lines are kept sorted by (ipr, n, r, s). "hash" is an FNV-1a digest of the
// record content excluding runtime and version; re-emitting a record with
// the same key and hash is a no-op.

struct ResultRecord {
  std::size_t n = 0;
  bool ipr = false;
  RsPair pair;
  std::uint64_t isomer_count = 0;
  std::size_t c_max = 0;
  std::uint64_t count = 0;
  std::vector<std::string> representatives;
  std::uint64_t runtime_ms = 0;
  std::string toolkit_version = kToolkitVersion;

  auto key() const { return std::tuple(ipr, n, pair); }

  std::string content_hash() const {
    std::string s = std::to_string(n) + '|' + (ipr ? '1' : '0') + '|' + std::to_string(pair.r) +
                    '|' + std::to_string(pair.s) + '|' + std::to_string(isomer_count) + '|' +
                    std::to_string(c_max) + '|' + std::to_string(count);
    for (const auto& r : representatives) s += '|' + r;
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  std::string to_line() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["ipr"] = ipr;
    j["r"] = pair.r;
    j["s"] = pair.s;
    j["isomer_count"] = isomer_count;
    j["C_max"] = c_max;
    j["N"] = count;
    j["representatives"] = representatives;
    j["runtime_ms"] = runtime_ms;
    j["toolkit_version"] = toolkit_version;
    j["hash"] = content_hash();
    return j.dump();
  }

  static ResultRecord from_line(const std::string& line) {
    try {
      const auto j = nlohmann::json::parse(line);
      ResultRecord r;
      r.n = j.at("n").get<std::size_t>();
      r.ipr = j.at("ipr").get<bool>();
      r.pair = {j.at("r").get<unsigned>(), j.at("s").get<unsigned>()};
      r.isomer_count = j.at("isomer_count").get<std::uint64_t>();
      r.c_max = j.at("C_max").get<std::size_t>();
      r.count = j.at("N").get<std::uint64_t>();
      r.representatives = j.at("representatives").get<std::vector<std::string>>();
      r.runtime_ms = j.value("runtime_ms", std::uint64_t{0});
      r.toolkit_version = j.value("toolkit_version", std::string{});
      if (j.contains("hash") && j["hash"].get<std::string>() != r.content_hash())
        throw SurveyError(SurveyErrc::BadRecord, "hash mismatch: " + line);
      return r;
    } catch (const nlohmann::json::exception& e) {
      throw SurveyError(SurveyErrc::BadRecord, std::string(e.what()) + ": " + line);
    }
  }
};

inline std::vector<ResultRecord> records_from_row(const SurveyRow& row) {
  std::vector<ResultRecord> out;
  for (const auto& [pair, st] : row.stats) {
    ResultRecord r;
    r.n = row.n;
    r.ipr = row.ipr;
    r.pair = pair;
    r.isomer_count = row.isomer_count;
    r.c_max = st.c_max;
    r.count = st.count;
    for (const auto& s : st.representatives) r.representatives.push_back(format_spiral(s));
    r.runtime_ms = row.runtime_ms;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<SurveyRow> rows_from_records(const std::vector<ResultRecord>& records) {
  std::map<std::pair<bool, std::size_t>, SurveyRow> rows;
  for (const auto& r : records) {
    auto& row = rows[{r.ipr, r.n}];
    row.n = r.n;
    row.ipr = r.ipr;
    row.isomer_count = r.isomer_count;
    row.runtime_ms = std::max(row.runtime_ms, r.runtime_ms);
    PairStat st;
    st.c_max = r.c_max;
    st.count = r.count;
    for (const auto& s : r.representatives) st.representatives.push_back(parse_spiral(s));
    row.stats[r.pair] = std::move(st);
  }
  std::vector<SurveyRow> out;
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

inline std::vector<ResultRecord> read_results(std::istream& in) {
  std::vector<ResultRecord> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(ResultRecord::from_line(line));
  return out;
}

inline std::vector<ResultRecord> read_results(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SurveyError(SurveyErrc::SinkUnavailable, "cannot read " + path.string());
  return read_results(in);
}

/// Merges rows into the results file at `path`, creating it if needed.
/// Existing records are kept; a record whose key is already present with
/// the same content is skipped, one with different content is a Conflict.
inline void emit_results(const std::vector<SurveyRow>& rows, const std::filesystem::path& path) {
  std::map<std::tuple<bool, std::size_t, RsPair>, ResultRecord> merged;
  if (std::filesystem::exists(path))
    for (auto& r : read_results(path)) merged.emplace(r.key(), std::move(r));
  for (const auto& row : rows)
    for (auto& rec : records_from_row(row)) {
      auto [it, inserted] = merged.emplace(rec.key(), rec);
      if (!inserted && it->second.content_hash() != rec.content_hash())
        throw SurveyError(SurveyErrc::Conflict,
                          "n=" + std::to_string(rec.n) + " " + to_string(rec.pair) +
                              " already recorded with different content");
    }
  std::string content;
  for (const auto& [key, rec] : merged) content += rec.to_line() + "\n";
  detail::write_file_atomically(path, content);
}

}  // namespace fullerene
