#include "trn/tournament.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "trn/rng.hpp"

#include <nlohmann/json.hpp>

namespace trn {

int VertexSubset::size() const { return std::popcount(bits); }

Tournament::Tournament(int n, bool) : n_(n) {
  if (n < 1) throw std::invalid_argument("tournament size must be >= 1");
  wpr_ = std::size_t(n + 63) / 64;
  rows_.assign(wpr_ * std::size_t(n), 0);
  cols_.assign(wpr_ * std::size_t(n), 0);
}

void Tournament::set_arc(int i, int j) {
  rows_[std::size_t(i) * wpr_ + std::size_t(j >> 6)] |= std::uint64_t(1)
                                                        << (j & 63);
  cols_[std::size_t(j) * wpr_ + std::size_t(i >> 6)] |= std::uint64_t(1)
                                                        << (i & 63);
}

int Tournament::out_degree(int i) const {
  int d = 0;
  for (std::size_t w = 0; w < wpr_; ++w)
    d += std::popcount(rows_[std::size_t(i) * wpr_ + w]);
  return d;
}

Tournament Tournament::from_arcs(int n,
                                 const std::vector<std::vector<bool>>& arcs) {
  Tournament t(n, true);
  if (int(arcs.size()) != n)
    throw std::invalid_argument("arc matrix has wrong row count");
  for (int i = 0; i < n; ++i)
    if (int(arcs[std::size_t(i)].size()) != n)
      throw std::invalid_argument("arc matrix row " + std::to_string(i) +
                                  " has wrong length");
  for (int i = 0; i < n; ++i) {
    if (arcs[std::size_t(i)][std::size_t(i)])
      throw std::invalid_argument("loop at vertex " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      bool fwd = arcs[std::size_t(i)][std::size_t(j)];
      bool bwd = arcs[std::size_t(j)][std::size_t(i)];
      if (fwd == bwd)
        throw std::invalid_argument(
            "pair {" + std::to_string(i) + "," + std::to_string(j) +
            "} must be oriented in exactly one direction");
      if (fwd)
        t.set_arc(i, j);
      else
        t.set_arc(j, i);
    }
  }
  return t;
}

Tournament make_transitive(int m) {
  Tournament t(m, true);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) t.set_arc(i, j);
  return t;
}

Tournament make_random(int m, std::uint64_t seed) {
  Tournament t(m, true);
  BitStream bits(seed);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (bits.next_bit())
        t.set_arc(i, j);
      else
        t.set_arc(j, i);
    }
  return t;
}

Tournament from_pair_bits(int m, std::uint64_t bits) {
  if (m * (m - 1) / 2 > 64)
    throw std::invalid_argument("pair-bit construction needs m <= 11");
  Tournament t(m, true);
  int p = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j, ++p) {
      if ((bits >> p) & 1u)
        t.set_arc(i, j);
      else
        t.set_arc(j, i);
    }
  return t;
}

TriangularComposition::TriangularComposition(Tournament t1, Tournament t2,
                                             Tournament t3)
    : t1_(std::move(t1)),
      t2_(std::move(t2)),
      t3_(std::move(t3)),
      composed_(t1_.n() + t2_.n() + t3_.n(), true) {
  const int m1 = t1_.n(), m2 = t2_.n(), m3 = t3_.n();
  const int n = m1 + m2 + m3;
  const Tournament* parts[3] = {&t1_, &t2_, &t3_};
  const int off[3] = {0, m1, m1 + m2};
  auto block = [&](int v) { return v < m1 ? 0 : v < m1 + m2 ? 1 : 2; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int bi = block(i), bj = block(j);
      bool fwd;
      if (bi == bj)
        fwd = parts[bi]->arc(i - off[bi], j - off[bj]);
      else
        fwd = (bj == (bi + 1) % 3);  // cross arcs run 1->2->3->1
      if (fwd)
        composed_.set_arc(i, j);
      else
        composed_.set_arc(j, i);
    }
}

const Tournament& TriangularComposition::part(int which) const {
  switch (which) {
    case 1: return t1_;
    case 2: return t2_;
    case 3: return t3_;
  }
  throw std::invalid_argument("part index must be 1, 2 or 3");
}

int TriangularComposition::part_offset(int which) const {
  switch (which) {
    case 1: return 0;
    case 2: return t1_.n();
    case 3: return t1_.n() + t2_.n();
  }
  throw std::invalid_argument("part index must be 1, 2 or 3");
}

int TriangularComposition::part_of(int v) const {
  if (v < 0 || v >= n()) throw std::invalid_argument("vertex out of range");
  if (v < t1_.n()) return 1;
  if (v < t1_.n() + t2_.n()) return 2;
  return 3;
}

Tournament TriangularComposition::restrict_to_part(int which) const {
  const int off = part_offset(which);
  const int m = part(which).n();
  VertexSubset s;
  for (int v = 0; v < m; ++v) s.bits |= std::uint64_t(1) << (off + v);
  return induced_subtournament(composed_, s);
}

TriangularComposition compose_c3(const Tournament& t1, const Tournament& t2,
                                 const Tournament& t3) {
  return TriangularComposition(t1, t2, t3);
}

Tournament induced_subtournament(const Tournament& t, VertexSubset s) {
  if (s.empty()) throw std::invalid_argument("vertex subset must be nonempty");
  if (t.n() > 64) throw std::invalid_argument("subset restriction needs n <= 64");
  if (t.n() < 64 && (s.bits >> t.n()) != 0)
    throw std::invalid_argument("vertex subset exceeds host size");
  std::vector<int> verts;
  for (int v = 0; v < t.n(); ++v)
    if (s.contains(v)) verts.push_back(v);
  const int m = int(verts.size());
  Tournament out(m, true);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (t.arc(verts[std::size_t(a)], verts[std::size_t(b)]))
        out.set_arc(a, b);
      else
        out.set_arc(b, a);
    }
  return out;
}

bool is_transitive(const Tournament& t) {
  // Transitive iff the out-degrees are a permutation of {0, ..., n-1}.
  std::vector<char> seen(std::size_t(t.n()), 0);
  for (int v = 0; v < t.n(); ++v) {
    int d = t.out_degree(v);
    if (seen[std::size_t(d)]) return false;
    seen[std::size_t(d)] = 1;
  }
  return true;
}

std::string serialize(const Tournament& t) {
  std::string out = std::to_string(t.n());
  out += '\n';
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.n(); ++j) out += t.arc(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

Tournament parse_tournament(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw parse_error("empty input");
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(lines[0], &pos);
    if (pos != lines[0].size()) throw parse_error("");
  } catch (...) {
    throw parse_error("line 1: vertex count must be a decimal integer");
  }
  if (n < 1) throw parse_error("line 1: vertex count must be >= 1");
  if (int(lines.size()) < n + 1)
    throw parse_error("expected " + std::to_string(n) + " matrix lines, got " +
                      std::to_string(lines.size() - 1));
  for (std::size_t i = std::size_t(n) + 1; i < lines.size(); ++i)
    if (!lines[i].empty())
      throw parse_error("line " + std::to_string(i + 1) +
                        ": unexpected trailing content");

  std::vector<std::vector<bool>> arcs(
      static_cast<std::size_t>(n),
      std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const std::string& row = lines[std::size_t(i) + 1];
    if (int(row.size()) != n)
      throw parse_error("line " + std::to_string(i + 2) + ": expected " +
                        std::to_string(n) + " characters, got " +
                        std::to_string(row.size()));
    for (int j = 0; j < n; ++j) {
      char c = row[std::size_t(j)];
      if (c != '0' && c != '1')
        throw parse_error("line " + std::to_string(i + 2) + ", column " +
                          std::to_string(j + 1) + ": expected 0 or 1");
      arcs[std::size_t(i)][std::size_t(j)] = (c == '1');
    }
  }
  for (int i = 0; i < n; ++i) {
    if (arcs[std::size_t(i)][std::size_t(i)])
      throw parse_error("line " + std::to_string(i + 2) + ", column " +
                        std::to_string(i + 1) + ": diagonal must be 0");
    for (int j = i + 1; j < n; ++j) {
      bool fwd = arcs[std::size_t(i)][std::size_t(j)];
      bool bwd = arcs[std::size_t(j)][std::size_t(i)];
      if (fwd == bwd)
        throw parse_error("pair (" + std::to_string(i) + "," +
                          std::to_string(j) + "): exactly one of entries (" +
                          std::to_string(i + 2) + "," + std::to_string(j + 1) +
                          ") and (" + std::to_string(j + 2) + "," +
                          std::to_string(i + 1) + ") must be 1");
    }
  }
  return Tournament::from_arcs(n, arcs);
}

void write_trn(const std::string& path, const Tournament& t) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << serialize(t);
}

Tournament read_trn(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_tournament(buf.str());
}

void export_composition(const std::string& path,
                        const TriangularComposition& comp) {
  write_trn(path, comp.composed());
  nlohmann::ordered_json sidecar;
  sidecar["m1"] = comp.part_size(1);
  sidecar["m2"] = comp.part_size(2);
  sidecar["m3"] = comp.part_size(3);
  std::ofstream f(path + ".json", std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + ".json for writing");
  f << sidecar.dump() << '\n';
}

}  // namespace trn
