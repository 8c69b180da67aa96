#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/ns_lattice.hpp"
#include "oracles.hpp"

using namespace ruled;

namespace {

DivisorClass cls(std::vector<Int> v) { return DivisorClass(std::move(v)); }

}  // namespace

TEST_CASE("geometrically ruled construction fixes the form") {
  const RuledSurface p1xp1 = make_geometrically_ruled(0, 0);
  CHECK(p1xp1.picard_rank() == 2);
  CHECK(intersect(p1xp1, section_class(p1xp1), section_class(p1xp1)) == 0);

  const RuledSurface f1 = make_geometrically_ruled(0, 1);
  CHECK(intersect(f1, section_class(f1), section_class(f1)) == -1);
  CHECK(intersect(f1, section_class(f1), fiber_class(f1)) == 1);
  CHECK(intersect(f1, fiber_class(f1), fiber_class(f1)) == 0);

  CHECK_THROWS_AS(make_geometrically_ruled(2, -1), Error);
  CHECK_THROWS_AS(make_geometrically_ruled(-1, 0), Error);
}

TEST_CASE("blow_up appends an exceptional class of square -1") {
  const RuledSurface s = make_geometrically_ruled(0, 0).blow_up();
  CHECK(s.picard_rank() == 3);
  const DivisorClass e1 = exceptional_class(s, 1);
  CHECK(intersect(s, e1, e1) == -1);
  CHECK(intersect(s, e1, fiber_class(s)) == 0);
  CHECK(intersect(s, e1, section_class(s)) == 0);

  const RuledSurface s2 = s.blow_up();
  CHECK(s2.picard_rank() == 4);
  CHECK(intersect(s2, exceptional_class(s2, 1), exceptional_class(s2, 2)) == 0);
}

TEST_CASE("intersection numbers from the worked instances") {
  const RuledSurface f01 = make_geometrically_ruled(0, 1);
  CHECK(intersect(f01, cls({1, 0}), cls({1, 0})) == -1);

  const RuledSurface f11 = make_geometrically_ruled(1, 1);
  const DivisorClass h = cls({1, 2});
  CHECK(intersect(f11, h, canonical_class(f11) + fiber_class(f11)) == -2);

  const RuledSurface b = make_geometrically_ruled(0, 0).blow_up();
  CHECK(intersect(b, cls({2, 2, -1}), cls({-2, -1, 1})) == -5);
}

TEST_CASE("intersect rejects mismatched coordinate lengths") {
  const RuledSurface s = make_geometrically_ruled(0, 0);
  CHECK_THROWS_AS(intersect(s, cls({1, 0, 0}), cls({1, 0})), Error);
  const RuledSurface b = s.blow_up();
  CHECK_THROWS_AS(intersect(b, cls({1, 0}), cls({1, 0})), Error);
}

TEST_CASE("canonical class formula and blowup shift") {
  CHECK(canonical_class(make_geometrically_ruled(0, 0)) == cls({-2, -2}));
  CHECK(canonical_class(make_geometrically_ruled(1, 0)) == cls({-2, 0}));
  CHECK(canonical_class(make_geometrically_ruled(0, 0).blow_up()) == cls({-2, -2, 1}));
}

TEST_CASE("fiber class pairings") {
  const RuledSurface s = make_geometrically_ruled(3, 2);
  const DivisorClass f = fiber_class(s);
  CHECK(intersect(s, f, f) == 0);
  CHECK(intersect(s, f, canonical_class(s)) == -2);

  const RuledSurface b = make_geometrically_ruled(0, 0).blow_up();
  CHECK(intersect(b, fiber_class(b), exceptional_class(b, 1)) == 0);
}

TEST_CASE("pushforward drops the last exceptional coordinate") {
  const RuledSurface b = make_geometrically_ruled(0, 0).blow_up();
  const DivisorClass d = cls({1, 0, 1});  // sigma + E_1
  CHECK(pushforward_class(b, d) == cls({1, 0}));

  // (push D)^2 = D^2 + (D.E_1)^2
  const Int d_sq = intersect(b, d, d);
  const Int de = intersect(b, d, exceptional_class(b, 1));
  CHECK(d_sq == -1);
  CHECK(intersect(b.blow_down(), pushforward_class(b, d), pushforward_class(b, d)) ==
        d_sq + de * de);

  const RuledSurface s = make_geometrically_ruled(0, 0);
  CHECK_THROWS_AS(pushforward_class(s, cls({1, 0})), Error);
}

TEST_CASE("pullback appends a zero and preserves the form") {
  const RuledSurface s = make_geometrically_ruled(0, 0);
  const RuledSurface b = s.blow_up();
  const DivisorClass d = cls({1, 1});
  CHECK(pullback_class(d) == cls({1, 1, 0}));
  CHECK(intersect(s, d, d) == 2);
  CHECK(intersect(b, pullback_class(d), pullback_class(d)) == 2);
  CHECK(pullback_class(canonical_class(s)) + exceptional_class(b, 1) == canonical_class(b));
}

TEST_CASE("pullback then pushforward is the identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const RuledSurface s = oracles::random_surface(rng);
    const DivisorClass d = oracles::random_class(rng, s, -8, 8);
    CHECK(pushforward_class(s.blow_up(), pullback_class(d)) == d);
  }
}

TEST_CASE("intersect is symmetric and bilinear on random triples") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1200; ++i) {
    const RuledSurface s = oracles::random_surface(rng);
    const DivisorClass a = oracles::random_class(rng, s, -8, 8);
    const DivisorClass b = oracles::random_class(rng, s, -8, 8);
    const DivisorClass c = oracles::random_class(rng, s, -8, 8);
    const Int lambda = oracles::pick(rng, -5, 5);
    CHECK(intersect(s, a, b) == intersect(s, b, a));
    CHECK(intersect(s, a + b, c) == intersect(s, a, c) + intersect(s, b, c));
    CHECK(intersect(s, lambda * a, c) == lambda * intersect(s, a, c));
  }
}

TEST_CASE("gram matrix has exactly one positive eigenvalue") {
  // Jacobi sign rule on the leading principal minors in the shifted basis
  // (sigma + (e+1) f, f, E_1..E_n), where every minor is nonzero.
  for (Int g = 0; g <= 3; ++g)
    for (Int e = 0; e <= 4; ++e)
      for (Int n = 0; n <= 5; ++n) {
        RuledSurface s = make_geometrically_ruled(g, e);
        for (Int i = 0; i < n; ++i) s = s.blow_up();
        std::vector<DivisorClass> basis;
        basis.push_back(section_class(s) + (e + 1) * fiber_class(s));
        basis.push_back(fiber_class(s));
        for (Int i = 1; i <= n; ++i) basis.push_back(exceptional_class(s, i));

        const std::size_t rho = basis.size();
        std::vector<std::vector<long long>> gram(rho, std::vector<long long>(rho));
        for (std::size_t i = 0; i < rho; ++i)
          for (std::size_t j = 0; j < rho; ++j)
            gram[i][j] = intersect(s, basis[i], basis[j]);

        long long prev = 1;
        int positives = 0;
        for (std::size_t k = 1; k <= rho; ++k) {
          std::vector<std::vector<long long>> minor(k, std::vector<long long>(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = gram[i][j];
          const long long det = oracles::det_exact(minor);
          REQUIRE(det != 0);
          if ((prev > 0) == (det > 0)) ++positives;
          prev = det;
        }
        CHECK(positives == 1);
      }
}

TEST_CASE("adjunction pairings across the surface grid") {
  for (Int g = 0; g <= 3; ++g)
    for (Int e = 0; e <= 4; ++e)
      for (Int n = 0; n <= 5; ++n) {
        RuledSurface s = make_geometrically_ruled(g, e);
        for (Int i = 0; i < n; ++i) s = s.blow_up();
        const DivisorClass k = canonical_class(s);
        CHECK(intersect(s, k, fiber_class(s)) == -2);
        for (Int i = 1; i <= n; ++i) {
          const DivisorClass e_i = exceptional_class(s, i);
          CHECK(intersect(s, k, e_i) == -1);
          CHECK(intersect(s, e_i, e_i) == -1);
        }
      }
}

TEST_CASE("blow_down undoes blow_up and rejects the base") {
  const RuledSurface s = make_geometrically_ruled(2, 3);
  CHECK(s.blow_up().blow_down() == s);
  CHECK_THROWS_AS(s.blow_down(), Error);
  CHECK_THROWS_AS(exceptional_class(s, 1), Error);
}
