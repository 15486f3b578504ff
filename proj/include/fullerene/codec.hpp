#pragma once

// planar_code streams and the spiral text format.
//
// planar_code layout: the 15 ASCII bytes ">>planar_code<<" once, then per
// graph one byte n (or a 0 byte followed by n as 16-bit little endian when
// n > 255), then for every vertex its neighbours in rotation order,
// 1-based, each list terminated by a 0 entry. Entries are one byte when
// the header byte was n and 16-bit little endian after the escape.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fullerene/graph.hpp"
#include "fullerene/spiral.hpp"

namespace fullerene {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

enum class CodecErrc { BadHeader, TruncatedRecord, ValidationFailed };

inline const char* to_string(CodecErrc e) {
  switch (e) {
    case CodecErrc::BadHeader: return "BadHeader";
    case CodecErrc::TruncatedRecord: return "TruncatedRecord";
    case CodecErrc::ValidationFailed: return "ValidationFailed";
  }
  return "CodecError";
}

class CodecError : public std::runtime_error {
 public:
  CodecError(CodecErrc code, std::size_t record, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + " (record " + std::to_string(record) +
                           "): " + detail),
        code_(code),
        record_(record) {}

  CodecErrc code() const noexcept { return code_; }
  /// 0-based index of the offending record.
  std::size_t record() const noexcept { return record_; }

 private:
  CodecErrc code_;
  std::size_t record_;
};

/// Incremental planar_code reader: one graph in memory at a time.
class PlanarCodeReader {
 public:
  explicit PlanarCodeReader(std::istream& in, Validation mode = Validation::Strict)
      : in_(in), mode_(mode) {
    char header[kPlanarCodeHeader.size()];
    in_.read(header, static_cast<std::streamsize>(sizeof header));
    if (in_.gcount() != static_cast<std::streamsize>(sizeof header) ||
        std::string_view(header, sizeof header) != kPlanarCodeHeader)
      throw CodecError(CodecErrc::BadHeader, 0, "missing \">>planar_code<<\" header");
  }

  /// Next graph, or nullopt at a clean end of stream.
  std::optional<FullereneGraph> next() {
    const int first = in_.get();
    if (first == std::char_traits<char>::eof()) return std::nullopt;
    const std::size_t record = index_;
    std::size_t n = static_cast<unsigned char>(first);
    bool wide = false;
    if (n == 0) {
      wide = true;
      n = read_u16(record);
    }
    NeighborLists lists(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (;;) {
        const std::size_t x = wide ? read_u16(record) : read_u8(record);
        if (x == 0) break;
        if (x > n)
          throw CodecError(CodecErrc::ValidationFailed, record,
                           "neighbour " + std::to_string(x) + " exceeds n = " + std::to_string(n));
        if (lists[v].size() > 3)
          throw CodecError(CodecErrc::ValidationFailed, record,
                           "vertex " + std::to_string(v + 1) + " has more than 3 neighbours");
        lists[v].push_back(static_cast<Vertex>(x - 1));
      }
    }
    ++index_;
    try {
      return build_graph(lists, record, mode_);
    } catch (const GraphError& e) {
      throw CodecError(CodecErrc::ValidationFailed, record, e.what());
    }
  }

  std::size_t records_read() const noexcept { return index_; }

 private:
  std::size_t read_u8(std::size_t record) {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof())
      throw CodecError(CodecErrc::TruncatedRecord, record, "stream ended inside a record");
    return static_cast<unsigned char>(c);
  }

  std::size_t read_u16(std::size_t record) {
    const std::size_t lo = read_u8(record);
    const std::size_t hi = read_u8(record);
    return lo | (hi << 8);
  }

  std::istream& in_;
  Validation mode_;
  std::size_t index_ = 0;
};

class PlanarCodeWriter {
 public:
  explicit PlanarCodeWriter(std::ostream& out) : out_(out) {
    out_.write(kPlanarCodeHeader.data(), static_cast<std::streamsize>(kPlanarCodeHeader.size()));
  }

  void write(const FullereneGraph& g) {
    const std::size_t n = g.vertex_count();
    const bool wide = n > 255;
    if (wide) {
      out_.put(0);
      put_u16(n);
    } else {
      out_.put(static_cast<char>(n));
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
        if (wide)
          put_u16(u + 1);
        else
          out_.put(static_cast<char>(u + 1));
      }
      if (wide)
        put_u16(0);
      else
        out_.put(0);
    }
  }

 private:
  void put_u16(std::size_t x) {
    out_.put(static_cast<char>(x & 0xff));
    out_.put(static_cast<char>((x >> 8) & 0xff));
  }

  std::ostream& out_;
};

inline std::vector<FullereneGraph> read_planar_code(std::istream& in,
                                                    Validation mode = Validation::Strict) {
  PlanarCodeReader reader(in, mode);
  std::vector<FullereneGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

inline std::vector<FullereneGraph> read_planar_code(std::string_view bytes,
                                                    Validation mode = Validation::Strict) {
  std::istringstream in{std::string(bytes)};
  return read_planar_code(in, mode);
}

template <class Range>
std::string write_planar_code(const Range& graphs) {
  std::ostringstream out;
  PlanarCodeWriter writer(out);
  for (const FullereneGraph& g : graphs) writer.write(g);
  return std::move(out).str();
}

// --- spiral text ----------------------------------------------------------

enum class SpiralFormat { Positions, Sizes };

/// Accepts either a list of face sizes separated by spaces and/or commas
/// ("5 6 5 ...") or the pentagon-position form "n: p1 p2 ... p12" with
/// 1-based positions.
inline SpiralSequence parse_spiral(std::string_view text) {
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\r' || c == '\n'; };
  std::vector<std::size_t> values;
  std::optional<std::size_t> vertex_count;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]) && text[j] != ':') ++j;
    const std::string_view token = text.substr(i, j - i);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw SpiralError(SpiralErrc::BadToken, "\"" + std::string(token) + "\"");
    if (j < text.size() && text[j] == ':') {
      if (vertex_count || !values.empty())
        throw SpiralError(SpiralErrc::BadToken, "misplaced ':'");
      vertex_count = value;
      ++j;
    } else {
      values.push_back(value);
    }
    i = j;
  }
  if (vertex_count) {
    for (std::size_t k = 1; k < values.size(); ++k)
      if (values[k] <= values[k - 1])
        throw SpiralError(SpiralErrc::BadToken, "pentagon positions must increase");
    return SpiralSequence::from_positions(*vertex_count, values);
  }
  std::vector<std::uint8_t> sizes;
  sizes.reserve(values.size());
  for (std::size_t v : values) {
    if (v != 5 && v != 6) throw SpiralError(SpiralErrc::BadToken, std::to_string(v));
    sizes.push_back(static_cast<std::uint8_t>(v));
  }
  std::size_t fives = 0;
  for (auto s : sizes) fives += s == 5;
  if (fives != 12)
    throw SpiralError(SpiralErrc::WrongPentagonCount, std::to_string(fives) + " pentagons");
  if (sizes.size() < 12)
    throw SpiralError(SpiralErrc::LengthMismatch, std::to_string(sizes.size()) + " faces");
  return SpiralSequence(std::move(sizes));
}

inline std::string format_spiral(const SpiralSequence& s,
                                 SpiralFormat format = SpiralFormat::Positions) {
  std::string out;
  if (format == SpiralFormat::Positions) {
    out = std::to_string(s.vertex_count()) + ":";
    for (std::size_t p : s.pentagon_positions()) out += " " + std::to_string(p);
  } else {
    for (std::size_t i = 0; i < s.face_count(); ++i) {
      if (i) out += ' ';
      out += static_cast<char>('0' + s.sizes()[i]);
    }
  }
  return out;
}

/// One spiral per line; blank lines and lines starting with '#' are skipped.
inline std::vector<SpiralSequence> read_spiral_text(std::istream& in) {
  std::vector<SpiralSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_spiral(line));
  }
  return out;
}

}  // namespace fullerene
