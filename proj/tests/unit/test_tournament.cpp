#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "trn/exact.hpp"
#include "trn/rng.hpp"
#include "trn/tournament.hpp"

using namespace trn;

namespace {

bool invariants_hold(const Tournament& t) {
  for (int i = 0; i < t.n(); ++i) {
    if (t.arc(i, i)) return false;
    for (int j = 0; j < t.n(); ++j)
      if (i != j && t.arc(i, j) == t.arc(j, i)) return false;
  }
  return true;
}

bool has_directed_triangle_free_order(const Tournament& t) {
  // literal no-directed-cycle check: in a tournament, any directed cycle
  // implies a directed 3-cycle, so scanning triples decides acyclicity
  for (int a = 0; a < t.n(); ++a)
    for (int b = 0; b < t.n(); ++b)
      for (int c = 0; c < t.n(); ++c)
        if (a != b && b != c && a != c && t.arc(a, b) && t.arc(b, c) &&
            t.arc(c, a))
          return false;
  return true;
}

std::string data_path(const char* name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("transitive construction") {
  CHECK(make_transitive(1).n() == 1);
  const Tournament t3 = make_transitive(3);
  CHECK(t3.arc(0, 1));
  CHECK(t3.arc(0, 2));
  CHECK(t3.arc(1, 2));
  CHECK_FALSE(t3.arc(1, 0));
  CHECK(is_transitive(t3));
  for (int m = 1; m <= 64; ++m) CHECK(is_transitive(make_transitive(m)));

  const Tournament t5 = make_transitive(5);
  CHECK(count_hamilton_paths(t5) == 1);
  const HamiltonPath p = find_hamilton_path(t5);
  CHECK(p.order == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(make_transitive(0), std::invalid_argument);
}

TEST_CASE("random construction is deterministic and valid") {
  for (std::uint64_t seed : {0ull, 1ull, 0xDEADBEEFull}) {
    const Tournament a = make_random(7, seed);
    const Tournament b = make_random(7, seed);
    CHECK(a == b);
    CHECK(invariants_hold(a));
  }
  CHECK_FALSE(make_random(7, 1) == make_random(7, 2));
  CHECK(invariants_hold(make_random(4, 99)));
  CHECK_THROWS_AS(make_random(0, 5), std::invalid_argument);
}

TEST_CASE("random arcs are fair coins") {
  int heads = 0;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s)
    if (make_random(5, std::uint64_t(s)).arc(0, 1)) ++heads;
  const double frac = double(heads) / trials;
  CHECK(frac > 0.48);  // 3 sigma of a fair binomial is ~0.015
  CHECK(frac < 0.52);
}

TEST_CASE("pair-bit construction enumerates distinct tournaments") {
  std::set<std::string> seen;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const Tournament t = from_pair_bits(3, bits);
    CHECK(invariants_hold(t));
    seen.insert(serialize(t));
  }
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(from_pair_bits(12, 0), std::invalid_argument);
}

TEST_CASE("triangular composition invariants") {
  const Tournament one = make_transitive(1);
  const TriangularComposition c3 = compose_c3(one, one, one);
  CHECK(c3.n() == 3);
  CHECK(count_hamilton_cycles(c3.composed()) == 1);  // the directed 3-cycle

  const Tournament t1 = make_random(2, 11);
  const Tournament t2 = make_random(3, 22);
  const Tournament t3 = make_random(4, 33);
  const TriangularComposition comp = compose_c3(t1, t2, t3);
  CHECK(comp.n() == 9);
  CHECK(comp.part_size(1) == 2);
  CHECK(comp.part_offset(2) == 2);
  CHECK(comp.part_offset(3) == 5);

  // every cross arc follows 1->2, 2->3, 3->1
  int cross = 0;
  for (int i = 0; i < comp.n(); ++i)
    for (int j = 0; j < comp.n(); ++j) {
      if (i == j || comp.part_of(i) == comp.part_of(j)) continue;
      if (comp.composed().arc(i, j)) {
        ++cross;
        const int pi = comp.part_of(i), pj = comp.part_of(j);
        CHECK(pj == (pi % 3) + 1);
      }
    }
  CHECK(cross == 2 * 3 + 3 * 4 + 4 * 2);

  CHECK(comp.restrict_to_part(1) == t1);
  CHECK(comp.restrict_to_part(2) == t2);
  CHECK(comp.restrict_to_part(3) == t3);
}

TEST_CASE("block restriction inverts composition over random parts") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tournament t1 = make_random(1 + int(seed % 6), seed * 3 + 1);
    const Tournament t2 = make_random(1 + int((seed / 2) % 6), seed * 3 + 2);
    const Tournament t3 = make_random(1 + int((seed / 3) % 6), seed * 3 + 3);
    const TriangularComposition comp = compose_c3(t1, t2, t3);
    CHECK(comp.restrict_to_part(1) == t1);
    CHECK(comp.restrict_to_part(2) == t2);
    CHECK(comp.restrict_to_part(3) == t3);
  }
}

TEST_CASE("induced subtournament") {
  const Tournament t = make_random(8, 404);
  CHECK(induced_subtournament(t, VertexSubset::full(8)) == t);
  CHECK(induced_subtournament(t, VertexSubset::of({3})).n() == 1);
  CHECK(is_transitive(
      induced_subtournament(make_transitive(8), VertexSubset::of({1, 4, 6}))));

  const VertexSubset s = VertexSubset::of({2, 5, 7});
  const Tournament sub = induced_subtournament(t, s);
  const int picked[] = {2, 5, 7};  // order-preserving relabel: 2->0, 5->1, 7->2
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(sub.arc(a, b) == t.arc(picked[a], picked[b]));

  CHECK_THROWS_AS(induced_subtournament(t, VertexSubset{}),
                  std::invalid_argument);
}

TEST_CASE("transitivity test agrees with literal cycle search") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Tournament t = make_random(8, seed);
    CHECK(is_transitive(t) == has_directed_triangle_free_order(t));
  }
  CHECK_FALSE(is_transitive(from_pair_bits(3, 0b010)));  // a 3-cycle
}

TEST_CASE("serialization format and round trip") {
  CHECK(serialize(make_transitive(2)) == "2\n01\n00\n");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Tournament t = make_random(1 + int(seed % 9), seed);
    CHECK(parse_tournament(serialize(t)) == t);
  }
}

TEST_CASE("parser reports positioned errors") {
  CHECK_THROWS_WITH_AS(parse_tournament("2\n01\n10\n"),
                       doctest::Contains("exactly one"), parse_error);
  CHECK_THROWS_WITH_AS(parse_tournament("2\n11\n00\n"),
                       doctest::Contains("diagonal"), parse_error);
  CHECK_THROWS_WITH_AS(parse_tournament("3\n010\n001\n"),
                       doctest::Contains("matrix lines"), parse_error);
  CHECK_THROWS_AS(parse_tournament("2\n0x\n00\n"), parse_error);
  CHECK_THROWS_AS(parse_tournament("x\n"), parse_error);
  CHECK_THROWS_AS(parse_tournament("0\n"), parse_error);
  CHECK_THROWS_AS(parse_tournament("2\n010\n000\n"), parse_error);
}

TEST_CASE("trn files read and reject as documented") {
  const Tournament triangle = read_trn(data_path("triangle.trn"));
  CHECK(triangle.n() == 3);
  CHECK_FALSE(is_transitive(triangle));
  CHECK(is_transitive(read_trn(data_path("transitive4.trn"))));
  CHECK(is_transitive(read_trn(data_path("transitive5.trn"))));
  CHECK_THROWS_AS(read_trn(data_path("bad_orientation.trn")), parse_error);
  CHECK_THROWS_AS(read_trn(data_path("bad_diagonal.trn")), parse_error);
  CHECK_THROWS_AS(read_trn(data_path("bad_dims.trn")), parse_error);
  CHECK_THROWS(read_trn(data_path("missing.trn")));
}

TEST_CASE("composition export writes matrix plus sidecar") {
  const TriangularComposition comp =
      compose_c3(make_transitive(2), make_transitive(1), make_transitive(2));
  const std::string path = "export_test_tmp.trn";
  export_composition(path, comp);
  CHECK(read_trn(path) == comp.composed());
  std::ifstream sidecar(path + ".json");
  std::string contents((std::istreambuf_iterator<char>(sidecar)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == "{\"m1\":2,\"m2\":1,\"m3\":2}\n");
  std::remove(path.c_str());
  std::remove((path + ".json").c_str());
}

TEST_CASE("vertex subsets") {
  const VertexSubset s = VertexSubset::of({0, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.empty());
  CHECK(VertexSubset::full(4).bits == 0b1111);
  CHECK(VertexSubset{}.empty());
}

TEST_CASE("seed derivation separates nearby masters") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}
