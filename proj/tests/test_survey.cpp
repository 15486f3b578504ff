#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fullerene/reference_tables.hpp"
#include "fullerene/survey.hpp"

using namespace fullerene;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fullerene-test-" + std::to_string(std::random_device{}()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void expect_cell(const SurveyRow& row, RsPair p, std::size_t c, std::uint64_t n) {
  EXPECT_EQ(row.stat(p).c_max, c) << "n=" << row.n << " " << to_string(p);
  EXPECT_EQ(row.stat(p).count, n) << "n=" << row.n << " " << to_string(p);
}

// Rows rebuilt from the published tables, for exercising the claim checks.
std::vector<SurveyRow> rows_from_tables(bool ipr, std::size_t up_to) {
  std::vector<SurveyRow> rows;
  const auto pairs = default_rs_pairs();
  for (const auto& ref : reference::table(ipr)) {
    if (ref.n > up_to) break;
    // The IPR table has no lines for n = 62..68, where no isomers exist.
    for (std::size_t gap = rows.empty() ? ref.n : rows.back().n + 2; gap < ref.n; gap += 2) {
      SurveyRow empty;
      empty.n = gap;
      empty.ipr = ipr;
      for (const auto& p : pairs) empty.stats[p];
      rows.push_back(empty);
    }
    SurveyRow row;
    row.n = ref.n;
    row.ipr = ipr;
    row.isomer_count = 1;
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      row.stats[pairs[c]].c_max = ref.cells[c].c_max;
      row.stats[pairs[c]].count = ref.cells[c].count;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Survey, Row28) {
  const auto row = survey_row(28, false);
  EXPECT_EQ(row.isomer_count, 2u);
  for (const auto& p : default_rs_pairs()) expect_cell(row, p, 5, 1);
}

TEST(Survey, Row48) {
  const auto row = survey_row(48, false);
  EXPECT_EQ(row.isomer_count, 199u);
  expect_cell(row, {1, 1}, 30, 1);
  expect_cell(row, {2, 2}, 41, 1);
  expect_cell(row, {1, 2}, 39, 1);
  expect_cell(row, {3, 3}, 41, 1);
  expect_cell(row, {2, 3}, 41, 1);
  expect_cell(row, {1, 3}, 41, 1);
}

TEST(Survey, IprRow70) {
  const auto row = survey_row(70, true);
  EXPECT_EQ(row.isomer_count, 1u);
  for (const auto& p : default_rs_pairs()) expect_cell(row, p, 5, 1);
}

TEST(Survey, IprRowBelow60IsEmpty) {
  const auto row = survey_row(40, true);
  EXPECT_EQ(row.isomer_count, 0u);
  EXPECT_EQ(row.stat({1, 1}).count, 0u);
}

TEST(Survey, RowInvariantsAndRepresentatives) {
  SurveyOptions opt;
  opt.representative_cap = 3;
  for (std::size_t n : {34u, 44u, 46u, 50u}) {
    const auto row = survey_row(n, false, default_rs_pairs(), opt);
    for (const auto& [pair, st] : row.stats) {
      EXPECT_GE(st.c_max, 1u);
      EXPECT_LE(st.c_max, n);
      EXPECT_GE(st.count, 1u);
      EXPECT_EQ(st.representatives.size(), std::min<std::uint64_t>(st.count, 3));
      EXPECT_TRUE(std::ranges::is_sorted(st.representatives));
      for (const auto& rep : st.representatives) {
        const auto g = wind_up(rep);
        ASSERT_TRUE(g);
        EXPECT_EQ(canonical_spiral(*g).spiral, rep);
        EXPECT_EQ(complexity(all_pairs_distances(*g), pair.r, pair.s), st.c_max);
      }
    }
  }
}

TEST(Survey, RepresentativesAreTheLeastAttainingSpirals) {
  const std::size_t n = 46;
  const RsPair p{1, 1};
  std::vector<SpiralSequence> attaining;
  std::size_t best = 0;
  for (const auto& g : generate(n)) {
    const auto c = complexity(all_pairs_distances(g.graph), p.r, p.s);
    if (c > best) {
      best = c;
      attaining.clear();
    }
    if (c == best) attaining.push_back(g.spiral.spiral);
  }
  std::ranges::sort(attaining);
  SurveyOptions opt;
  opt.representative_cap = 2;
  const auto row = survey_row(n, false, {p}, opt);
  EXPECT_EQ(row.stat(p).c_max, best);
  EXPECT_EQ(row.stat(p).count, attaining.size());
  attaining.resize(std::min<std::size_t>(2, attaining.size()));
  EXPECT_EQ(row.stat(p).representatives, attaining);
}

TEST(Survey, WorkerCountDoesNotChangeResults) {
  SurveyOptions one, eight;
  one.workers = 1;
  eight.workers = 8;
  for (std::size_t n : {40u, 50u}) {
    const auto a = survey_row(n, false, default_rs_pairs(), one);
    const auto b = survey_row(n, false, default_rs_pairs(), eight);
    EXPECT_EQ(a, b);
    TempDir dir;
    emit_results({a}, dir.path / "a.jsonl");
    emit_results({b}, dir.path / "b.jsonl");
    EXPECT_EQ(slurp(dir.path / "a.jsonl"), slurp(dir.path / "b.jsonl"));
  }
}

TEST(Survey, PartialStatesMergeInAnyOrder) {
  const std::size_t n = 44;
  const SpiralSearch search(n, false);
  const auto pairs = default_rs_pairs();
  SurveyOptions opt;
  opt.representative_cap = 2;
  std::vector<PartialSurvey> parts;
  for (const auto& prefix : search.partitions())
    parts.push_back(detail::scan_partition(search, prefix, pairs, opt));
  auto fold = [&](const std::vector<PartialSurvey>& order) {
    PartialSurvey total;
    for (const auto& p : order) total.merge(p, opt.representative_cap);
    return total;
  };
  const auto forward = fold(parts);
  auto reversed = parts;
  std::ranges::reverse(reversed);
  EXPECT_EQ(fold(reversed), forward);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    auto shuffled = parts;
    std::ranges::shuffle(shuffled, rng);
    EXPECT_EQ(fold(shuffled), forward);
  }
  // Tree-shaped merge as well.
  PartialSurvey left = fold({parts.begin(), parts.begin() + static_cast<long>(parts.size() / 2)});
  const PartialSurvey right = fold({parts.begin() + static_cast<long>(parts.size() / 2), parts.end()});
  left.merge(right, opt.representative_cap);
  EXPECT_EQ(left, forward);
  EXPECT_EQ(forward.isomers, 89u);
}

TEST(Survey, CheckpointResume) {
  TempDir dir;
  SurveyOptions opt;
  opt.checkpoint = dir.path / "ckpt.json";
  opt.stop_after_partitions = 3;
  try {
    survey_row(50, false, default_rs_pairs(), opt);
    FAIL() << "expected an interruption";
  } catch (const SurveyError& e) {
    EXPECT_EQ(e.code(), SurveyErrc::Interrupted);
  }
  const auto doc = nlohmann::json::parse(slurp(*opt.checkpoint));
  EXPECT_EQ(doc["format"], "fullerene-survey-checkpoint");
  EXPECT_EQ(doc["version"], 1);
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_EQ(doc["rows"].begin()->size(), 3u);

  opt.stop_after_partitions.reset();
  const auto resumed = survey_row(50, false, default_rs_pairs(), opt);
  EXPECT_EQ(resumed.partitions_scanned, SpiralSearch(50, false).partitions().size() - 3);
  EXPECT_EQ(resumed, survey_row(50, false));

  // A finished checkpoint answers without rescanning.
  const auto again = survey_row(50, false, default_rs_pairs(), opt);
  EXPECT_EQ(again.partitions_scanned, 0u);
  EXPECT_EQ(again, resumed);
}

TEST(Survey, CorruptCheckpointIsReported) {
  TempDir dir;
  std::ofstream(dir.path / "bad.json") << "{\"format\": \"other\"}";
  SurveyOptions opt;
  opt.checkpoint = dir.path / "bad.json";
  try {
    survey_row(24, false, default_rs_pairs(), opt);
    FAIL();
  } catch (const SurveyError& e) {
    EXPECT_EQ(e.code(), SurveyErrc::BadCheckpoint);
  }
}

TEST(Survey, IdentitiesAreCheckedOnEveryGraphWhenAsked) {
  SurveyOptions opt;
  opt.assertion_sample = 1;
  EXPECT_NO_THROW(survey_row(40, false, {{1, 1}, {1, 3}, {2, 2}}, opt));
}

TEST(Survey, EmptyPairListIsRejected) {
  EXPECT_THROW(survey_row(24, false, {}), SurveyError);
  EXPECT_THROW(survey_row(24, false, {{2, 1}}), MetricsError);
  EXPECT_THROW(survey_row(22, false), SpiralError);
}

TEST(Results, RoundTrip) {
  const auto row = survey_row(36, false);
  const auto records = records_from_row(row);
  ASSERT_EQ(records.size(), 6u);
  std::stringstream io;
  for (const auto& r : records) io << r.to_line() << '\n';
  const auto back = rows_from_records(read_results(io));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], row);
  const auto j = nlohmann::json::parse(records[0].to_line());
  for (const char* key : {"n", "ipr", "r", "s", "isomer_count", "C_max", "N", "representatives",
                          "runtime_ms", "toolkit_version"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Results, SortedAndIdempotent) {
  TempDir dir;
  const auto file = dir.path / "results.jsonl";
  // Emit out of order: IPR row first, then general rows descending.
  std::vector<SurveyRow> rows{survey_row(60, true)};
  for (std::size_t n = 30; n >= 20; n -= 2)
    if (is_fullerene_vertex_count(n)) rows.push_back(survey_row(n, false));
  emit_results(rows, file);
  const auto records = read_results(file);
  ASSERT_EQ(records.size(), 6u * rows.size());
  for (std::size_t i = 1; i < records.size(); ++i)
    EXPECT_LT(records[i - 1].key(), records[i].key());
  EXPECT_FALSE(records.front().ipr);
  EXPECT_EQ(records.front().n, 20u);
  EXPECT_TRUE(records.back().ipr);

  const auto before = slurp(file);
  emit_results({survey_row(28, false)}, file);
  EXPECT_EQ(slurp(file), before);

  // New rows are merged in place.
  emit_results({survey_row(32, false)}, file);
  EXPECT_EQ(read_results(file).size(), records.size() + 6);
}

TEST(Results, ConflictingContentIsRejected) {
  TempDir dir;
  const auto file = dir.path / "results.jsonl";
  auto row = survey_row(28, false);
  emit_results({row}, file);
  row.stats.begin()->second.count += 1;
  try {
    emit_results({row}, file);
    FAIL();
  } catch (const SurveyError& e) {
    EXPECT_EQ(e.code(), SurveyErrc::Conflict);
  }
}

TEST(Results, TamperedRecordIsRejected) {
  const auto rec = records_from_row(survey_row(24, false)).front();
  auto line = rec.to_line();
  line.replace(line.find("\"N\":1"), 5, "\"N\":2");
  EXPECT_THROW(ResultRecord::from_line(line), SurveyError);
  EXPECT_THROW(ResultRecord::from_line("{not json"), SurveyError);
}

TEST(Results, UnwritableSink) {
  TempDir dir;
  try {
    emit_results({survey_row(24, false)}, dir.path / "missing" / "results.jsonl");
    FAIL();
  } catch (const SurveyError& e) {
    EXPECT_EQ(e.code(), SurveyErrc::SinkUnavailable);
  }
}

TEST(Frontier, FirstIrregularForCubes) {
  const auto e = find_minimal_irregular({3, 3}, false, 70);
  ASSERT_TRUE(e.minimal_n);
  EXPECT_EQ(*e.minimal_n, 62u);
  EXPECT_EQ(e.attaining, 1u);
  ASSERT_EQ(e.representatives.size(), 1u);
  const auto g = wind_up(e.representatives[0]);
  ASSERT_TRUE(g);
  EXPECT_TRUE(is_irregular(*g, 3, 3));
}

TEST(Frontier, NoneFoundReportsScannedRange) {
  const auto e = find_minimal_irregular({1, 1}, false, 40);
  EXPECT_FALSE(e.minimal_n);
  EXPECT_EQ(e.scanned_to, 40u);
}

TEST(Propositions, CubicClauseConfirmedTo80) {
  const auto rows = rows_from_tables(false, 80);
  for (const auto& res : verify_propositions(rows)) {
    if (res.clause.ipr || res.clause.pair.s != 3) continue;
    EXPECT_EQ(res.status, ClauseStatus::Confirmed) << res.clause.name << " " << res.detail;
    EXPECT_EQ(res.witnesses.front(), 62u);
    EXPECT_EQ(res.witnesses.size(), 10u);  // 62, 64, ..., 80
    EXPECT_EQ(res.scanned_to, 80u);
  }
}

TEST(Propositions, SquareGapTo70) {
  const auto rows = rows_from_tables(false, 70);
  const auto f = frontier_from_rows(rows, {2, 2}, false);
  EXPECT_EQ(*f.minimal_n, 64u);
  for (const auto& res : verify_propositions(rows)) {
    if (res.clause.ipr || !(res.clause.pair == RsPair{2, 2})) continue;
    EXPECT_EQ(res.witnesses, std::vector<std::size_t>{64});
    EXPECT_EQ(res.status, ClauseStatus::OutOfRange);
  }
  for (const auto& row : rows)
    if (row.n >= 66) EXPECT_EQ(row.stat({2, 2}).c_max, row.n - 1);
}

TEST(Propositions, IprCubicClauseOutOfRangeAt108) {
  const auto rows = rows_from_tables(true, 108);
  for (const auto& res : verify_propositions(rows)) {
    if (!res.clause.ipr || res.clause.pair.s != 3) continue;
    EXPECT_EQ(res.status, ClauseStatus::OutOfRange) << res.clause.name;
    EXPECT_TRUE(res.witnesses.empty());
    EXPECT_EQ(res.scanned_to, 108u);
  }
}

TEST(Propositions, RefutedWhenTheTableDisagrees) {
  auto rows = rows_from_tables(false, 80);
  for (auto& row : rows)
    if (row.n == 70) row.stats[{3, 3}].c_max = 69;
  for (const auto& res : verify_propositions(rows))
    if (res.clause.pair == RsPair{3, 3} && !res.clause.ipr)
      EXPECT_EQ(res.status, ClauseStatus::Refuted);
}

TEST(Propositions, GapsInScannedRowsStopTheScan) {
  auto rows = rows_from_tables(false, 80);
  std::erase_if(rows, [](const SurveyRow& r) { return r.n == 50; });
  for (const auto& res : verify_propositions(rows))
    if (!res.clause.ipr) EXPECT_EQ(res.scanned_to, 48u);
}
