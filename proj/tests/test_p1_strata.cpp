#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "core/p1_strata.hpp"

using namespace ruled;

namespace {

// h^1(O(n)) on P^1
Int h1(Int n) { return std::max<Int>(0, -n - 1); }

// codim of a locally free type through the cohomology table, term by term
Int codim_by_table(const std::vector<Int>& parts) {
  Int total = 0;
  for (Int a : parts)
    for (Int b : parts) total += h1(a - b);
  return total;
}

template <typename Fn>
void for_each_decreasing_tuple(Int rank, Int lo, Int hi, std::vector<Int>& acc, Fn&& fn) {
  if (rank == 0) {
    fn(acc);
    return;
  }
  const Int cap = acc.empty() ? hi : acc.back();
  for (Int v = lo; v <= cap; ++v) {
    acc.push_back(v);
    for_each_decreasing_tuple(rank - 1, lo, hi, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

TEST_CASE("enumeration on the worked instances") {
  const auto only_free = [](const std::vector<SplittingType>& all) {
    std::vector<SplittingType> out;
    for (const SplittingType& t : all)
      if (t.torsion_points == 0) out.push_back(t);
    return out;
  };

  const auto a = only_free(enumerate_splitting_types(2, -1, -2));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == SplittingType{{0, -1}, 0});
  CHECK(a[1] == SplittingType{{1, -2}, 0});

  const auto b = only_free(enumerate_splitting_types(2, 0, -1));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == SplittingType{{0, 0}, 0});
  CHECK(b[1] == SplittingType{{1, -1}, 0});

  const auto c = enumerate_splitting_types(1, 0, 0);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == SplittingType{{0}, 0});
}

TEST_CASE("enumeration respects rank, degree, window and order") {
  const auto all = enumerate_splitting_types(3, -2, -4);
  CHECK(!all.empty());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const SplittingType& t = all[i];
    CHECK(t.rank() == 3);
    CHECK(t.degree() == -2);
    CHECK(t.torsion_points >= 0);
    CHECK(std::is_sorted(t.parts.rbegin(), t.parts.rend()));
    CHECK(*std::min_element(t.parts.begin(), t.parts.end()) >= -4);
    if (i > 0 && all[i - 1].torsion_points == t.torsion_points)
      CHECK(all[i - 1].parts < t.parts);  // lexicographic within a torsion slice
  }
  CHECK(enumerate_splitting_types(2, -5, 0).empty());  // empty window is valid
}

TEST_CASE("stratum codimension on the worked instances") {
  for (Int r = 2; r <= 6; ++r)
    for (Int d = 1; d < r; ++d) {
      std::vector<Int> generic(static_cast<std::size_t>(r), 0);
      for (Int i = 0; i < d; ++i) generic[static_cast<std::size_t>(r - 1 - i)] = -1;
      CHECK(stratum_codim(SplittingType{generic, 0}) == 0);
    }
  CHECK(stratum_codim(SplittingType{{1, 0, -1}, 0}) == 1);
  CHECK(stratum_codim(SplittingType{{1, -1}, 0}) == 1);
  CHECK(stratum_codim(SplittingType{{1, -2}, 0}) == 2);
}

TEST_CASE("codimension agrees with the cohomology table on all small types") {
  std::vector<Int> acc;
  for (Int r = 1; r <= 6; ++r)
    for_each_decreasing_tuple(r, -10, 10, acc, [&](const std::vector<Int>& parts) {
      CHECK(stratum_codim(SplittingType{parts, 0}) == codim_by_table(parts));
    });
}

TEST_CASE("codimension is invariant under uniform shifts") {
  for (const SplittingType& t : enumerate_splitting_types(4, -3, -6)) {
    if (t.torsion_points != 0) continue;
    for (Int shift : {-3, 1, 7}) {
      std::vector<Int> parts = t.parts;
      for (Int& p : parts) p += shift;
      CHECK(stratum_codim(SplittingType{parts, 0}) == stratum_codim(t));
    }
  }
}

TEST_CASE("torsion strata cost ext1 of the free part plus t(r+1)") {
  for (Int r = 1; r <= 5; ++r) {
    // generic free part of degree -1 with one torsion point
    std::vector<Int> parts(static_cast<std::size_t>(r), 0);
    parts.back() = -1;
    const SplittingType t{parts, 1};
    CHECK(stratum_codim(t) == r + 1);
    CHECK(stratum_codim(t) >= 2);
  }
  CHECK(stratum_codim(SplittingType{{1, -2}, 2}) == 2 + 2 * 3);
}

TEST_CASE("verify_strata on the worked instances") {
  const StrataReport a = verify_strata(2, 1, -10);
  CHECK(a.pass);
  REQUIRE(a.special.size() == 1);
  CHECK(a.special[0].codim == 0);

  const StrataReport b = verify_strata(2, 0, -10);
  CHECK(b.pass);
  REQUIRE(b.special.size() == 2);
  CHECK(b.special[0].type == SplittingType{{0, 0}, 0});
  CHECK(b.special[0].codim == 0);
  CHECK(b.special[1].type == SplittingType{{1, -1}, 0});
  CHECK(b.special[1].codim == 1);
  CHECK(b.other_min_codim >= 2);

  CHECK(verify_strata(6, 3, -8).pass);
}

TEST_CASE("verify_strata passes on the whole grid") {
  for (Int r = 2; r <= 6; ++r)
    for (Int d = 0; d < r; ++d) {
      const StrataReport rep = verify_strata(r, d, -10);
      CHECK(rep.pass);
      CHECK(rep.offenders.empty());
      CHECK(rep.other_min_codim >= 2);
    }
}

TEST_CASE("verify_strata input and window errors") {
  CHECK_THROWS_AS(verify_strata(1, 0, -10), Error);
  CHECK_THROWS_AS(verify_strata(3, 3, -10), Error);
  CHECK_THROWS_AS(verify_strata(3, -1, -10), Error);
  CHECK_THROWS_AS(verify_strata(2, 1, 0), Error);  // window misses the generic type
}

TEST_CASE("splitting type validation") {
  CHECK_THROWS_AS(stratum_codim(SplittingType{{0, 1}, 0}), Error);   // increasing
  CHECK_THROWS_AS(stratum_codim(SplittingType{{0}, -1}), Error);    // negative torsion
  CHECK_THROWS_AS(stratum_codim(SplittingType{{}, 0}), Error);      // empty
}
