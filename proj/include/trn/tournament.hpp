#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trn {

/// Malformed `.trn` input. The message names the offending line/column.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Subset of the vertices of a host tournament, as a bitmask.
/// Only meaningful for hosts with at most 64 vertices.
struct VertexSubset {
  std::uint64_t bits = 0;

  static VertexSubset of(std::initializer_list<int> vertices) {
    VertexSubset s;
    for (int v : vertices) s.bits |= std::uint64_t(1) << v;
    return s;
  }
  static VertexSubset full(int n) {
    return {n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1};
  }
  bool contains(int v) const { return (bits >> v) & 1u; }
  int size() const;
  bool empty() const { return bits == 0; }
};

/// Orientation of a complete graph on n labeled vertices, 0-indexed.
///
/// Invariants (enforced by every constructor path):
///   - no vertex has an arc to itself;
///   - for every pair i != j exactly one of the arcs i->j, j->i is present.
///
/// Rows are bit-packed; arc queries are O(1). Instances are immutable once
/// built, so they are safe to share across threads.
class Tournament {
 public:
  int n() const { return n_; }

  /// True iff the arc i->j is present.
  bool arc(int i, int j) const {
    return (rows_[std::size_t(i) * wpr_ + std::size_t(j >> 6)] >>
            (j & 63)) & 1u;
  }

  int out_degree(int i) const;

  /// Successor set of i as a 64-bit mask. Requires n <= 64.
  std::uint64_t out_mask64(int i) const { return rows_[std::size_t(i) * wpr_]; }
  /// Predecessor set of j as a 64-bit mask. Requires n <= 64.
  std::uint64_t in_mask64(int j) const { return cols_[std::size_t(j) * wpr_]; }

  bool operator==(const Tournament& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

  /// Builds from an explicit arc matrix, validating both invariants.
  /// Throws std::invalid_argument naming the first offending entry.
  static Tournament from_arcs(int n, const std::vector<std::vector<bool>>& arcs);

 private:
  Tournament(int n, bool);  // uninitialized; factories orient every pair
  void set_arc(int i, int j);

  int n_ = 0;
  std::size_t wpr_ = 0;  // words per row
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;  // transposed copy, for predecessor masks

  friend Tournament make_transitive(int);
  friend Tournament make_random(int, std::uint64_t);
  friend Tournament from_pair_bits(int, std::uint64_t);
  friend Tournament induced_subtournament(const Tournament&, VertexSubset);
  friend class TriangularComposition;
};

/// Three tournaments glued along a directed triangle: every cross arc runs
/// part 1 -> part 2, part 2 -> part 3, or part 3 -> part 1. Vertex blocks
/// occupy contiguous index ranges in part order, so block membership is a
/// function of offsets alone.
class TriangularComposition {
 public:
  const Tournament& part(int which) const;  // which in {1,2,3}
  int part_size(int which) const { return part(which).n(); }
  int part_offset(int which) const;
  const Tournament& composed() const { return composed_; }
  int n() const { return composed_.n(); }

  /// Block (1, 2 or 3) containing composed-tournament vertex v.
  int part_of(int v) const;

  /// The composed tournament restricted to one block, relabeled from 0.
  Tournament restrict_to_part(int which) const;

 private:
  TriangularComposition(Tournament t1, Tournament t2, Tournament t3);
  Tournament t1_, t2_, t3_;
  Tournament composed_;

  friend TriangularComposition compose_c3(const Tournament&, const Tournament&,
                                          const Tournament&);
};

/// The transitive tournament on m vertices: arc i->j iff i < j.
Tournament make_transitive(int m);

/// Uniformly random tournament: each unordered pair {i, j}, i < j, taken in
/// lexicographic order, is oriented i->j iff the next bit of a
/// BitStream(seed) is 1. Identical (m, seed) gives identical output on all
/// platforms.
Tournament make_random(int m, std::uint64_t seed);

/// Tournament on m vertices from explicit pair orientations: bit t of
/// `bits` orients the t-th pair in the same lexicographic order as
/// make_random (bit 1 means i->j). Requires m*(m-1)/2 <= 64, i.e. m <= 11.
/// Lets callers enumerate every labeled tournament of a given small order.
Tournament from_pair_bits(int m, std::uint64_t bits);

/// Cross arcs oriented 1->2, 2->3, 3->1; blocks ordered by part.
TriangularComposition compose_c3(const Tournament& t1, const Tournament& t2,
                                 const Tournament& t3);

/// Subtournament induced by S under the order-preserving relabeling of S.
/// S must be nonempty and within {0, ..., n-1}.
Tournament induced_subtournament(const Tournament& t, VertexSubset s);

/// True iff t has no directed cycle. Uses the degree criterion: a tournament
/// is transitive iff its out-degrees are a permutation of {0, ..., n-1}.
bool is_transitive(const Tournament& t);

/// Text form: first line the decimal vertex count n, then n lines of n
/// characters over {0,1}; character j of matrix line i is 1 iff arc i->j.
std::string serialize(const Tournament& t);

/// Inverse of serialize. Enforces both invariants; errors report the
/// offending line and column.
Tournament parse_tournament(const std::string& text);

/// Writes serialize(t) to `path`.
void write_trn(const std::string& path, const Tournament& t);

/// Reads and parses a `.trn` file.
Tournament read_trn(const std::string& path);

/// Writes the composed tournament to `path` plus a JSON sidecar
/// `path + ".json"` recording the block sizes {"m1":..,"m2":..,"m3":..}.
void export_composition(const std::string& path,
                        const TriangularComposition& comp);

}  // namespace trn
