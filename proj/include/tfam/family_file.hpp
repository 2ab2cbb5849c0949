#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tfam/element_set.hpp"
#include "tfam/set_family.hpp"

namespace tfam {

/// Parameters from a `# n=<int> k=<int> t=<int>` header line.
struct FamilyHeader {
  int n = 0;
  int k = 0;
  int t = 0;
};

/// Raw contents of a family file: optional header plus member element lists.
struct FamilyFileContents {
  std::optional<FamilyHeader> header;
  std::vector<std::vector<int>> members;
};

/// Writes the header and one ascending, space-separated member per line (LF).
void write_family_file(std::ostream& out, const SetFamily& family);

/// Throws ParseError on malformed lines, unsorted or repeated elements, or
/// duplicate members.
FamilyFileContents read_family_file(std::istream& in);

/// Resolves n, k, t from the header, falling back to `fallback` for a
/// headerless file, and builds the family. Throws ParseError when
/// parameters are missing or members do not fit them.
SetFamily to_family(const FamilyFileContents& contents, std::optional<FamilyHeader> fallback = std::nullopt);

}  // namespace tfam
