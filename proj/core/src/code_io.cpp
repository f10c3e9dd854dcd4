#include "mds/code_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mds/error.hpp"

namespace mds {

namespace {

int header_field(const std::string& tok, const char* key) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) throw FormatError("expected '" + prefix + "...' in header, got '" + tok + "'");
  int v = 0;
  const char* b = tok.data() + prefix.size();
  const char* e = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) throw FormatError("bad integer in header field '" + tok + "'");
  return v;
}

}  // namespace

CodeFile read_code(std::istream& in) {
  CodeFile out;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  int q = 0, n = 0;
  long long m = 0;
  std::vector<Symbol> flat;
  long long words = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (!line.empty() && line[0] == '#') {
        std::string body = line.substr(1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        out.comments.push_back(body);
        continue;
      }
      if (line.empty()) continue;
      std::istringstream hs(line);
      std::string magic, tq, tn, tm, extra;
      hs >> magic >> tq >> tn >> tm;
      if (magic != "MDS" || tm.empty() || (hs >> extra)) throw FormatError("line " + std::to_string(lineno) + ": expected 'MDS q=<q> n=<n> m=<M>'");
      q = header_field(tq, "q");
      n = header_field(tn, "n");
      m = header_field(tm, "m");
      if (q < 2 || q > kMaxAlphabet) throw FormatError("q out of range");
      if (n < 1 || n > kMaxLength) throw FormatError("n out of range");
      if (m < 1) throw FormatError("m must be positive");
      flat.reserve(static_cast<std::size_t>(m * n));
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    if (words >= m) throw FormatError("line " + std::to_string(lineno) + ": more words than m=" + std::to_string(m));
    const char* p = line.data();
    const char* e = line.data() + line.size();
    for (int j = 0; j < n; ++j) {
      while (p < e && *p == ' ') ++p;
      int v = 0;
      auto [np, ec] = std::from_chars(p, e, v);
      if (ec != std::errc() || np == p) throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " symbols");
      if (v < 0 || v >= q) throw FormatError("line " + std::to_string(lineno) + ": symbol " + std::to_string(v) + " outside 0.." + std::to_string(q - 1));
      flat.push_back(static_cast<Symbol>(v));
      p = np;
    }
    while (p < e && *p == ' ') ++p;
    if (p != e) throw FormatError("line " + std::to_string(lineno) + ": trailing data after " + std::to_string(n) + " symbols");
    ++words;
  }
  if (!have_header) throw FormatError("missing 'MDS' header");
  if (words != m) throw FormatError("header says m=" + std::to_string(m) + " but file has " + std::to_string(words) + " words");
  try {
    out.code = Code::from_flat(q, n, std::move(flat));
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
  return out;
}

CodeFile read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return read_code(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_code(std::ostream& out, const Code& c, const std::vector<std::string>& comments) {
  out << format_code(c, comments);
}

std::string format_code(const Code& c, const std::vector<std::string>& comments) {
  std::string s;
  s.reserve(c.size() * static_cast<std::size_t>(c.n()) * 3 + 64);
  for (const auto& cm : comments) s += "# " + cm + "\n";
  s += "MDS q=" + std::to_string(c.q()) + " n=" + std::to_string(c.n()) + " m=" + std::to_string(c.size()) + "\n";
  char buf[8];
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto w = c.word(i);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) s += ' ';
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<int>(w[j]));
      s.append(buf, p);
    }
    s += '\n';
  }
  return s;
}

void write_code_file(const std::filesystem::path& path, const Code& c, const std::vector<std::string>& comments) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp);
    out << format_code(c, comments);
    if (!out) throw FormatError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mds
