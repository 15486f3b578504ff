#include <gtest/gtest.h>

#include <sstream>

#include "fullerene/codec.hpp"
#include "oracles.hpp"

using namespace fullerene;

TEST(Codec, DodecahedronStreamLayout) {
  const auto g = oracle::dodecahedron();
  const std::string bytes = write_planar_code(std::vector{g});
  // header + count byte + 20 * (3 neighbours + terminator)
  ASSERT_EQ(bytes.size(), 15u + 1 + 80);
  EXPECT_EQ(bytes.substr(0, 15), ">>planar_code<<");
  EXPECT_EQ(static_cast<unsigned char>(bytes[15]), 20);
  for (std::size_t v = 0; v < 20; ++v) {
    const std::size_t at = 16 + 4 * v;
    for (int k = 0; k < 3; ++k)
      EXPECT_EQ(static_cast<unsigned char>(bytes[at + k]), g.neighbors(v)[k] + 1);
    EXPECT_EQ(bytes[at + 3], 0);
  }
}

TEST(Codec, RoundTripIsByteExact) {
  const std::vector graphs{oracle::dodecahedron(), oracle::truncated_icosahedron()};
  const std::string bytes = write_planar_code(graphs);
  const auto back = read_planar_code(bytes);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].rotation(), graphs[0].rotation());
  EXPECT_EQ(back[1].rotation(), graphs[1].rotation());
  EXPECT_EQ(write_planar_code(back), bytes);
}

TEST(Codec, RoundTripAllGeneratedUpTo40) {
  for (std::size_t n = 20; n <= 40; n += 2) {
    if (!is_fullerene_vertex_count(n)) continue;
    std::vector<FullereneGraph> graphs;
    for (auto& g : generate(n)) graphs.push_back(std::move(g.graph));
    const std::string bytes = write_planar_code(graphs);
    const auto back = read_planar_code(bytes);
    ASSERT_EQ(back.size(), graphs.size()) << n;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      EXPECT_EQ(back[i].rotation(), graphs[i].rotation()) << n << " #" << i;
    EXPECT_EQ(write_planar_code(back), bytes) << n;
  }
}

TEST(Codec, WideEntriesAboveVertexCount255) {
  const auto g = oracle::leapfrog(oracle::leapfrog(oracle::truncated_icosahedron()));
  ASSERT_EQ(g.vertex_count(), 540u);
  const std::string bytes = write_planar_code(std::vector{g});
  EXPECT_EQ(bytes[15], 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[16]) | (static_cast<unsigned char>(bytes[17]) << 8),
            540);
  EXPECT_EQ(bytes.size(), 15u + 3 + 540 * 8);
  const auto back = read_planar_code(bytes);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].rotation(), g.rotation());
  EXPECT_EQ(write_planar_code(back), bytes);
}

TEST(Codec, StreamingReaderYieldsOneAtATime) {
  const std::vector graphs{oracle::dodecahedron(), oracle::dodecahedron()};
  std::istringstream in(write_planar_code(graphs));
  PlanarCodeReader reader(in);
  EXPECT_TRUE(reader.next());
  EXPECT_EQ(reader.records_read(), 1u);
  EXPECT_TRUE(reader.next());
  EXPECT_FALSE(reader.next());
  EXPECT_EQ(reader.records_read(), 2u);
}

TEST(Codec, BadHeader) {
  try {
    read_planar_code(std::string_view("<<planar_code>>\x14"));
    FAIL();
  } catch (const CodecError& e) {
    EXPECT_EQ(e.code(), CodecErrc::BadHeader);
  }
  EXPECT_THROW(read_planar_code(std::string_view(">>planar")), CodecError);
}

TEST(Codec, TruncatedRecordReportsIndex) {
  std::string bytes = write_planar_code(std::vector{oracle::dodecahedron(), oracle::dodecahedron()});
  bytes.resize(bytes.size() - 5);
  try {
    read_planar_code(bytes);
    FAIL();
  } catch (const CodecError& e) {
    EXPECT_EQ(e.code(), CodecErrc::TruncatedRecord);
    EXPECT_EQ(e.record(), 1u);
  }
}

TEST(Codec, SwappedNeighbourPairFailsValidation) {
  std::string bytes = write_planar_code(std::vector{oracle::dodecahedron(), oracle::dodecahedron()});
  // Second record, vertex 1: swap its first two neighbours.
  const std::size_t at = 16 + 80 + 1 + 4;
  std::swap(bytes[at], bytes[at + 1]);
  try {
    read_planar_code(bytes);
    FAIL();
  } catch (const CodecError& e) {
    EXPECT_EQ(e.code(), CodecErrc::ValidationFailed);
    EXPECT_EQ(e.record(), 1u);
  }
}

TEST(Codec, NeighbourOutOfRange) {
  std::string bytes = write_planar_code(std::vector{oracle::dodecahedron()});
  bytes[16] = 21;
  try {
    read_planar_code(bytes);
    FAIL();
  } catch (const CodecError& e) {
    EXPECT_EQ(e.code(), CodecErrc::ValidationFailed);
    EXPECT_EQ(e.record(), 0u);
  }
}

TEST(Codec, EmptyStreamHasNoGraphs) {
  EXPECT_TRUE(read_planar_code(kPlanarCodeHeader).empty());
}

TEST(SpiralText, PositionsAndSizesAgree) {
  const auto a = parse_spiral("20: 1 2 3 4 5 6 7 8 9 10 11 12");
  const auto b = parse_spiral("5 5 5 5 5 5 5 5 5 5 5 5");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.vertex_count(), 20u);
  EXPECT_EQ(format_spiral(a), "20: 1 2 3 4 5 6 7 8 9 10 11 12");
  EXPECT_EQ(format_spiral(a, SpiralFormat::Sizes), "5 5 5 5 5 5 5 5 5 5 5 5");
  EXPECT_EQ(parse_spiral(format_spiral(a, SpiralFormat::Sizes)), a);
}

TEST(SpiralText, C60Spiral) {
  const auto s = parse_spiral("60: 1,7,9,11,13,15,18,20,22,24,26,32");
  EXPECT_EQ(s.face_count(), 32u);
  EXPECT_EQ(s.sizes()[0], 5);
  EXPECT_EQ(s.sizes()[1], 6);
  EXPECT_EQ(parse_spiral(format_spiral(s)), s);
}

TEST(SpiralText, Errors) {
  auto code = [](std::string_view t) {
    try {
      parse_spiral(t);
    } catch (const SpiralError& e) {
      return e.code();
    }
    return SpiralErrc::NoSpiralFound;
  };
  EXPECT_EQ(code("5 5 7"), SpiralErrc::BadToken);
  EXPECT_EQ(code("5 x 6"), SpiralErrc::BadToken);
  EXPECT_EQ(code("5 5 5 5 5 5 5 5 5 5 5"), SpiralErrc::WrongPentagonCount);
  EXPECT_EQ(code("20: 1 2 3"), SpiralErrc::WrongPentagonCount);
  EXPECT_EQ(code("20: 1 2 3 4 5 6 7 8 9 10 11 13"), SpiralErrc::LengthMismatch);
  EXPECT_EQ(code("20: 1 1 2 3 4 5 6 7 8 9 10 11"), SpiralErrc::BadToken);
}

TEST(SpiralText, ReaderSkipsCommentsAndBlanks) {
  std::istringstream in("# header\n\n20: 1 2 3 4 5 6 7 8 9 10 11 12\n  \n60: 1 7 9 11 13 15 18 20 22 24 26 32\n");
  const auto all = read_spiral_text(in);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].vertex_count(), 60u);
}
