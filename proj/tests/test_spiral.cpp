#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "fullerene/codec.hpp"
#include "fullerene/spiral.hpp"
#include "oracles.hpp"

using namespace fullerene;

namespace {

std::vector<std::uint8_t> sizes_with_pentagons_at(std::size_t m,
                                                  const std::vector<std::size_t>& picks) {
  std::vector<std::uint8_t> s(m, 6);
  for (auto p : picks) s[p] = 5;
  return s;
}

// Calls f(sizes) for every placement of 12 pentagons among m faces.
template <class F>
void for_each_sequence(std::size_t m, F&& f) {
  std::vector<std::size_t> pick(12);
  for (std::size_t i = 0; i < 12; ++i) pick[i] = i;
  for (;;) {
    f(sizes_with_pentagons_at(m, pick));
    int i = 11;
    while (i >= 0 && pick[i] == m - 12 + static_cast<std::size_t>(i)) --i;
    if (i < 0) return;
    ++pick[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < 12; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

TEST(Spiral, SequenceBasics) {
  const auto s = SpiralSequence::from_positions(20, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  EXPECT_EQ(s.face_count(), 12u);
  EXPECT_EQ(s.vertex_count(), 20u);
  EXPECT_THROW(SpiralSequence({5, 6, 7}), SpiralError);
  EXPECT_THROW(SpiralSequence::from_positions(21, {}), SpiralError);
  EXPECT_LT(SpiralSequence::from_positions(24, {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13}),
            SpiralSequence::from_positions(24, {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 14}));
}

TEST(Spiral, DodecahedronWindsUp) {
  const auto g = wind_up(parse_spiral("20: 1 2 3 4 5 6 7 8 9 10 11 12"));
  ASSERT_TRUE(g);
  EXPECT_EQ(oracle::canonical_code(*g), oracle::canonical_code(oracle::dodecahedron()));
}

TEST(Spiral, C60CanonicalSpiral) {
  const auto c60 = oracle::truncated_icosahedron();
  EXPECT_EQ(format_spiral(canonical_spiral(c60).spiral), "60: 1 7 9 11 13 15 18 20 22 24 26 32");
  const auto g = wind_up(canonical_spiral(c60).spiral);
  ASSERT_TRUE(g);
  EXPECT_EQ(oracle::canonical_code(*g), oracle::canonical_code(c60));
}

TEST(Spiral, LeapfrogC180RoundTrip) {
  const auto c180 = oracle::leapfrog(oracle::truncated_icosahedron());
  ASSERT_EQ(c180.vertex_count(), 180u);
  EXPECT_TRUE(is_ipr(c180));
  const auto spiral = canonical_spiral(c180).spiral;
  const auto g = wind_up(spiral);
  ASSERT_TRUE(g);
  EXPECT_EQ(oracle::canonical_code(*g), oracle::canonical_code(c180));
  EXPECT_EQ(canonical_spiral(*g).spiral, spiral);
}

TEST(Spiral, UnsupportedVertexCounts) {
  for (std::size_t n : {0u, 18u, 21u, 22u, 23u, 380u, 400u}) {
    try {
      generate(n);
      FAIL() << n;
    } catch (const SpiralError& e) {
      EXPECT_EQ(e.code(), SpiralErrc::UnsupportedN) << n;
      if (n == 22) EXPECT_NE(std::string(e.what()).find("n = 20 and even n >= 24"), std::string::npos);
    }
  }
  const auto big = oracle::leapfrog(oracle::leapfrog(oracle::truncated_icosahedron()));
  try {
    canonical_spiral(big);
    FAIL();
  } catch (const SpiralError& e) {
    EXPECT_EQ(e.code(), SpiralErrc::UnsupportedN);
  }
}

TEST(Spiral, PublishedIsomerCounts) {
  // Classes up to reflection, as tabulated for fullerene isomers.
  const std::map<std::size_t, std::size_t> expected = {
      {20, 1},  {24, 1},  {26, 1},  {28, 2},  {30, 3},   {32, 6},   {34, 6},   {36, 15},
      {38, 17}, {40, 40}, {42, 45}, {44, 89}, {46, 116}, {48, 199}, {50, 271}};
  for (auto [n, count] : expected) EXPECT_EQ(generate(n).size(), count) << "n = " << n;
}

TEST(Spiral, PublishedIprCounts) {
  const std::map<std::size_t, std::size_t> expected = {
      {60, 1}, {62, 0}, {64, 0}, {66, 0}, {68, 0}, {70, 1}, {72, 1}, {74, 1}, {76, 2}, {78, 5}};
  for (auto [n, count] : expected) EXPECT_EQ(generate(n, true).size(), count) << "n = " << n;
}

TEST(Spiral, IprSearchEqualsFilteredGeneralSearch) {
  for (std::size_t n = 60; n <= 64; n += 2) {
    std::vector<SpiralSequence> filtered, direct;
    for (const auto& g : generate(n))
      if (is_ipr(g.graph)) filtered.push_back(g.spiral.spiral);
    for (const auto& g : generate(n, true)) {
      EXPECT_TRUE(is_ipr(g.graph));
      direct.push_back(g.spiral.spiral);
    }
    EXPECT_EQ(direct, filtered) << n;
  }
}

TEST(Spiral, OutputIsSortedDistinctAndSelfCanonical) {
  for (std::size_t n : {36u, 40u, 44u}) {
    const auto all = generate(n);
    std::set<std::vector<std::uint32_t>> codes;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& g = all[i];
      EXPECT_EQ(g.graph.id(), i);
      EXPECT_EQ(g.graph.vertex_count(), n);
      if (i) EXPECT_LT(all[i - 1].spiral.spiral, g.spiral.spiral);
      EXPECT_EQ(canonical_spiral(g.graph).spiral, g.spiral.spiral);
      codes.insert(oracle::canonical_code(g.graph));
    }
    EXPECT_EQ(codes.size(), all.size()) << "duplicate isomorphism classes at n = " << n;
  }
}

// Brute force over every placement of the twelve pentagons: the classes of
// all sequences that wind up must be exactly the generated classes.
TEST(Spiral, ExhaustiveAgainstBruteForce) {
  for (std::size_t n : {20u, 24u, 26u, 28u, 30u, 32u}) {
    const std::size_t m = n / 2 + 2;
    std::set<std::vector<std::uint32_t>> brute;
    for_each_sequence(m, [&](const std::vector<std::uint8_t>& s) {
      const SpiralSequence seq(s);
      if (auto g = wind_up(seq)) {
        EXPECT_LE(canonical_spiral(*g).spiral, seq);
        brute.insert(oracle::canonical_code(*g));
      }
    });
    std::set<std::vector<std::uint32_t>> generated;
    for (const auto& g : generate(n)) generated.insert(oracle::canonical_code(g.graph));
    EXPECT_EQ(brute, generated) << "n = " << n;
  }
}

TEST(Spiral, CanonicalSpiralIgnoresLabelsAndReflection) {
  std::mt19937_64 rng(20240601);
  for (std::size_t n : {24u, 28u, 36u}) {
    for (const auto& g : generate(n)) {
      const auto want = g.spiral.spiral;
      EXPECT_EQ(canonical_spiral(oracle::mirror(g.graph)).spiral, want);
      for (int k = 0; k < 50; ++k) {
        const auto h = oracle::relabel(g.graph, oracle::random_permutation(n, rng));
        ASSERT_EQ(canonical_spiral(h).spiral, want) << "n = " << n << " perm " << k;
      }
    }
  }
}

TEST(Spiral, PartitionsConcatenateToFullStream) {
  for (auto [n, ipr] : {std::pair{20u, false}, {24u, false}, {40u, false}, {60u, true}, {78u, true}}) {
    const SpiralSearch search(n, ipr);
    std::vector<SpiralSequence> whole, parts;
    search.run_all([&](GeneratedFullerene&& g) { whole.push_back(g.spiral.spiral); });
    for (const auto& p : search.partitions()) {
      ASSERT_EQ(p.size(), search.partition_depth());
      search.run(p, [&](GeneratedFullerene&& g) {
        const auto& sz = g.spiral.spiral.sizes();
        for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(sz[i], p[i] - '0');
        parts.push_back(g.spiral.spiral);
      });
    }
    EXPECT_EQ(parts, whole) << n;
  }
}

TEST(Spiral, BadPartition) {
  const SpiralSearch search(40, false);
  auto noop = [](GeneratedFullerene&&) {};
  EXPECT_THROW(search.run("55", noop), SpiralError);
  EXPECT_THROW(search.run(std::string(search.partition_depth(), '7'), noop), SpiralError);
}

TEST(Spiral, WindUpRejectsNonClosingSequences) {
  // Twelve pentagons first leaves two hexagons that cannot close a sphere.
  std::vector<std::uint8_t> s(14, 6);
  for (int i = 0; i < 12; ++i) s[i] = 5;
  EXPECT_FALSE(wind_up(SpiralSequence(s)));
}
