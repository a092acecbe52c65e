#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoflab/common.hpp"

namespace hoflab {

/// An OEIS b-file: "index value" lines, '#' comments and blank lines.
/// Raw lines are kept so that emit() reproduces the input up to trailing
/// whitespace.
class OeisBFile {
 public:
  struct Entry {
    Nat index = 0;
    Nat value = 0;
  };

  /// Throws std::invalid_argument (with the 1-based line number) on a
  /// malformed data line, a negative or oversized value, or indices that do
  /// not increase by exactly 1. An input without data lines is an error.
  static OeisBFile parse(std::string_view text, std::string id = {});

  /// Reads and parses a file; the id defaults to the file stem ("b005206"
  /// gives "A005206"). Throws std::runtime_error if the file cannot be read.
  static OeisBFile load(const std::string& path);

  /// Canonical file for values[i] at index offset + i.
  static OeisBFile from_values(std::string id, Nat offset, std::span<const Nat> values,
                               std::vector<std::string> comments = {});

  const std::string& id() const noexcept { return id_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Nat first_index() const { return entries_.front().index; }
  Nat last_index() const { return entries_.back().index; }

  std::string emit() const;

 private:
  std::string id_;
  std::vector<std::string> lines_;
  std::vector<Entry> entries_;
};

/// How a b-file relates to F_k.
enum class OffsetConvention {
  direct,            // a(i) = F_k(i)
  index_shift,       // a(i) = F_k(i + shift), shift != 0
  shifted_function,  // a(i) = F_k(i + 1) - 1
};

struct OeisDiff {
  std::string id;
  unsigned k = 0;
  bool match = false;
  OffsetConvention convention = OffsetConvention::direct;
  std::int64_t shift = 0;
  /// Every convention that matches the whole file, in preference order.
  std::vector<std::string> matching_conventions;
  Nat first_index = 0;
  Nat last_index = 0;
  Nat terms = 0;
  /// When nothing matches: first index where the file differs from F_k(i).
  std::optional<OeisBFile::Entry> mismatch;
  Nat expected = 0;

  std::string convention_text() const;
};

/// Compares a b-file against F_k under each candidate convention (direct,
/// index shifts -2..2, shifted function) and reports the first one that
/// matches every term. Nothing is silently shifted: the result names the
/// convention used.
OeisDiff oeis_diff(unsigned k, const OeisBFile& file);

/// OEIS ids of F_2 .. F_6; empty for other k.
std::string_view oeis_id_for(unsigned k);

}  // namespace hoflab
