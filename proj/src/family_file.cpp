#include "tfam/family_file.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "tfam/error.hpp"

namespace tfam {

namespace {

Error parse_error(int line_no, const std::string& what) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

int parse_int(int line_no, const std::string& digits) {
  int value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw parse_error(line_no, "bad integer '" + digits + "'");
  }
  return value;
}

}  // namespace

void write_family_file(std::ostream& out, const SetFamily& family) {
  out << "# n=" << family.n() << " k=" << family.k() << " t=" << family.t() << '\n';
  for (const auto& m : family.members()) {
    bool first = true;
    for (int e : m.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

FamilyFileContents read_family_file(std::istream& in) {
  static const std::regex header_re(R"(^#\s*n=(\d+)\s+k=(\d+)\s+t=(\d+)\s*$)");
  FamilyFileContents contents;
  std::set<std::vector<int>> seen;
  std::string line;
  int line_no = 0;
  bool saw_member = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') {
      std::smatch match;
      if (!std::regex_match(line, match, header_re)) throw parse_error(line_no, "malformed header");
      if (contents.header || saw_member) throw parse_error(line_no, "header must be the first line");
      contents.header = FamilyHeader{parse_int(line_no, match[1]), parse_int(line_no, match[2]), parse_int(line_no, match[3])};
      continue;
    }
    std::istringstream fields(line);
    std::vector<int> member;
    std::string token;
    while (fields >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw parse_error(line_no, "non-integer token '" + token + "'");
      }
      member.push_back(parse_int(line_no, token));
    }
    for (std::size_t i = 1; i < member.size(); ++i) {
      if (member[i] <= member[i - 1]) throw parse_error(line_no, "elements must be strictly increasing");
    }
    if (!seen.insert(member).second) throw parse_error(line_no, "duplicate member");
    contents.members.push_back(std::move(member));
    saw_member = true;
  }
  return contents;
}

SetFamily to_family(const FamilyFileContents& contents, std::optional<FamilyHeader> fallback) {
  const auto header = contents.header ? contents.header : fallback;
  if (!header) throw Error(ErrorKind::ParseError, "family file has no header and no n/k/t were given");
  const auto [n, k, t] = *header;
  if (n < 1 || n > kMaxAmbient) throw Error(ErrorKind::ParseError, "n must be in [1,64]");
  if (k < 0 || k > n) throw Error(ErrorKind::ParseError, "k must be in [0,n]");
  if (t < 1) throw Error(ErrorKind::ParseError, "t must be positive");
  std::vector<ElementSet> members;
  members.reserve(contents.members.size());
  for (const auto& m : contents.members) {
    if (static_cast<int>(m.size()) != k) {
      throw Error(ErrorKind::ParseError, "member with " + std::to_string(m.size()) + " elements, expected k=" +
                                             std::to_string(k));
    }
    for (int e : m) {
      if (e < 1 || e > n) throw Error(ErrorKind::ParseError, "element " + std::to_string(e) + " outside [1,n]");
    }
    members.push_back(ElementSet::from_elements(n, m));
  }
  return SetFamily(n, k, t, std::move(members));
}

}  // namespace tfam
