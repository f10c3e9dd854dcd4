#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mds/code.hpp"

namespace mds {

/// Parsed ".mds" file: the code plus any leading '#' comment lines.
struct CodeFile {
  Code code;
  std::vector<std::string> comments;  // without the leading "# "
};

/// Header `MDS q=<q> n=<n> m=<M>`, then one word per line. Words may
/// appear in any order on input; duplicates are rejected.
CodeFile read_code(std::istream& in);
CodeFile read_code_file(const std::filesystem::path& path);

/// Canonical byte layout: comments, header, sorted words, single spaces,
/// trailing newline.
void write_code(std::ostream& out, const Code& c, const std::vector<std::string>& comments = {});
std::string format_code(const Code& c, const std::vector<std::string>& comments = {});
void write_code_file(const std::filesystem::path& path, const Code& c, const std::vector<std::string>& comments = {});

}  // namespace mds
