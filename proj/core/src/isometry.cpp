#include "mds/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mds/error.hpp"

namespace mds {

namespace {

bool is_permutation_of_range(std::span<const std::uint8_t> p) {
  std::vector<char> seen(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void append_perm(std::ostringstream& os, std::span<const std::uint8_t> p) {
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << static_cast<int>(p[i]);
}

}  // namespace

Isometry::Isometry(int q, int n, std::vector<std::uint8_t> coord_perm, std::vector<std::uint8_t> symbol_perms)
    : q_(q), n_(n), coord_perm_(std::move(coord_perm)), symbol_perms_(std::move(symbol_perms)) {
  if (static_cast<int>(coord_perm_.size()) != n || static_cast<int>(symbol_perms_.size()) != n * q)
    throw ValidationError("isometry arrays have the wrong size");
  if (!is_permutation_of_range(coord_perm_)) throw ValidationError("coordinate map is not a permutation");
  for (int i = 0; i < n; ++i)
    if (!is_permutation_of_range(std::span(symbol_perms_).subspan(static_cast<std::size_t>(i * q), static_cast<std::size_t>(q))))
      throw ValidationError("symbol map at coordinate " + std::to_string(i) + " is not a permutation");
}

Isometry Isometry::identity(int q, int n) {
  std::vector<std::uint8_t> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n * q));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < q; ++a) s[static_cast<std::size_t>(i * q + a)] = static_cast<std::uint8_t>(a);
  return Isometry(q, n, std::move(pi), std::move(s));
}

Isometry Isometry::random(int q, int n, std::mt19937_64& rng) {
  Isometry g = identity(q, n);
  std::shuffle(g.coord_perm_.begin(), g.coord_perm_.end(), rng);
  for (int i = 0; i < n; ++i)
    std::shuffle(g.symbol_perms_.begin() + i * q, g.symbol_perms_.begin() + (i + 1) * q, rng);
  return g;
}

void Isometry::apply(std::span<const Symbol> in, std::span<Symbol> out) const {
  for (int j = 0; j < n_; ++j) {
    const int i = coord_perm_[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = symbol_perms_[static_cast<std::size_t>(i * q_ + in[static_cast<std::size_t>(j)])];
  }
}

Isometry Isometry::compose(const Isometry& h) const {
  if (q_ != h.q_ || n_ != h.n_) throw ParameterError("compose: isometries act on different spaces");
  // (g o h).c at coordinate i = s_i(t_{pi^-1(i)}(c_{sigma^-1 pi^-1 (i)})).
  std::vector<std::uint8_t> pi(static_cast<std::size_t>(n_));
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n_ * q_));
  for (int j = 0; j < n_; ++j) {
    const int mid = h.coord_perm_[static_cast<std::size_t>(j)];
    const int dst = coord_perm_[static_cast<std::size_t>(mid)];
    pi[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(dst);
    for (int a = 0; a < q_; ++a)
      s[static_cast<std::size_t>(dst * q_ + a)] =
          symbol_perms_[static_cast<std::size_t>(dst * q_ + h.symbol_perms_[static_cast<std::size_t>(mid * q_ + a)])];
  }
  return Isometry(q_, n_, std::move(pi), std::move(s));
}

Isometry Isometry::inverse() const {
  std::vector<std::uint8_t> pi(static_cast<std::size_t>(n_));
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n_ * q_));
  for (int j = 0; j < n_; ++j) {
    const int i = coord_perm_[static_cast<std::size_t>(j)];
    pi[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
    // g moved coordinate j to i applying s_i; the inverse moves i back to j applying s_i^-1.
    for (int a = 0; a < q_; ++a)
      s[static_cast<std::size_t>(j * q_ + symbol_perms_[static_cast<std::size_t>(i * q_ + a)])] = static_cast<std::uint8_t>(a);
  }
  return Isometry(q_, n_, std::move(pi), std::move(s));
}

bool Isometry::is_identity() const { return *this == identity(q_, n_); }

std::string Isometry::to_string() const {
  std::ostringstream os;
  os << "pi=";
  append_perm(os, coord_perm_);
  for (int i = 0; i < n_; ++i) {
    os << "; s" << i << "=";
    append_perm(os, std::span(symbol_perms_).subspan(static_cast<std::size_t>(i * q_), static_cast<std::size_t>(q_)));
  }
  return os.str();
}

Isometry Isometry::parse(const std::string& text) {
  std::vector<std::vector<int>> fields;
  std::vector<std::string> names;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    const auto eq = chunk.find('=');
    if (eq == std::string::npos) throw FormatError("isometry field without '=': '" + chunk + "'");
    std::string name = chunk.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    std::istringstream vals(chunk.substr(eq + 1));
    std::vector<int> v;
    int x;
    while (vals >> x) v.push_back(x);
    if (!vals.eof()) throw FormatError("bad integer in isometry field '" + name + "'");
    names.push_back(name);
    fields.push_back(std::move(v));
  }
  if (fields.empty() || names[0] != "pi") throw FormatError("isometry must start with 'pi='");
  const int n = static_cast<int>(fields[0].size());
  if (static_cast<int>(fields.size()) != n + 1) throw FormatError("isometry needs one symbol map per coordinate");
  const int q = n > 0 ? static_cast<int>(fields[1].size()) : 0;
  std::vector<std::uint8_t> pi;
  std::vector<std::uint8_t> s;
  for (int x : fields[0]) pi.push_back(static_cast<std::uint8_t>(x));
  for (int i = 0; i < n; ++i) {
    if (names[static_cast<std::size_t>(i + 1)] != "s" + std::to_string(i)) throw FormatError("expected field s" + std::to_string(i));
    if (static_cast<int>(fields[static_cast<std::size_t>(i + 1)].size()) != q) throw FormatError("symbol maps differ in size");
    for (int x : fields[static_cast<std::size_t>(i + 1)]) {
      if (x < 0 || x > 255) throw FormatError("symbol out of range");
      s.push_back(static_cast<std::uint8_t>(x));
    }
  }
  try {
    return Isometry(q, n, std::move(pi), std::move(s));
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
}

Code apply_isometry(const Isometry& g, const Code& c) {
  if (g.q() != c.q() || g.n() != c.n()) throw ParameterError("apply_isometry: dimensions differ");
  const auto n = static_cast<std::size_t>(c.n());
  std::vector<Symbol> flat(c.size() * n);
  for (std::size_t i = 0; i < c.size(); ++i) g.apply(c.word(i), std::span(flat).subspan(i * n, n));
  return Code::from_flat(c.q(), c.n(), std::move(flat));
}

std::vector<std::uint32_t> word_map(const Isometry& g, const Code& from, const Code& to) {
  if (from.size() != to.size()) throw ParameterError("word_map: codes differ in size");
  std::vector<std::uint32_t> perm(from.size());
  std::vector<Symbol> buf(static_cast<std::size_t>(from.n()));
  for (std::size_t i = 0; i < from.size(); ++i) {
    g.apply(from.word(i), buf);
    auto idx = to.index_of(buf);
    if (!idx) throw ValidationError("isometry does not map the first code onto the second");
    perm[i] = static_cast<std::uint32_t>(*idx);
  }
  return perm;
}

std::vector<std::uint32_t> word_permutation(const Isometry& g, const Code& c) { return word_map(g, c, c); }

std::vector<Isometry> full_group_generators(int q, int n) {
  std::vector<Isometry> gens;
  const Isometry id = Isometry::identity(q, n);
  if (n >= 2) {
    auto pi = id.coord_perm();
    std::swap(pi[0], pi[1]);
    gens.emplace_back(q, n, pi, id.symbol_perms());
  }
  if (n >= 3) {
    auto pi = id.coord_perm();
    for (int j = 0; j < n; ++j) pi[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((j + 1) % n);
    gens.emplace_back(q, n, pi, id.symbol_perms());
  }
  if (q >= 2) {
    auto s = id.symbol_perms();
    std::swap(s[0], s[1]);
    gens.emplace_back(q, n, id.coord_perm(), s);
  }
  if (q >= 3) {
    auto s = id.symbol_perms();
    for (int a = 0; a < q; ++a) s[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>((a + 1) % q);
    gens.emplace_back(q, n, id.coord_perm(), s);
  }
  return gens;
}

}  // namespace mds
