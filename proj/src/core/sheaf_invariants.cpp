#include "core/sheaf_invariants.hpp"

#include <sstream>

namespace ruled {

namespace {

Int half_exact(Int v) {
  if (v % 2 != 0)
    throw Error(ErrorCode::Internal, "Riemann-Roch halving is not integral");
  return v / 2;
}

}  // namespace

namespace detail {

RawChern twist_raw(const RuledSurface& s, const RawChern& c, const DivisorClass& line) {
  check_class(s, c.c1);
  check_class(s, line);
  const Int r = c.rank;
  const Int c2 = c.c2 + (r - 1) * intersect(s, line, c.c1) +
                 (r * (r - 1) / 2) * intersect(s, line, line);
  return RawChern{r, c.c1 + r * line, c2};
}

Int euler_pairing_raw(const RuledSurface& s, const RawChern& a, const RawChern& b) {
  check_class(s, a.c1);
  check_class(s, b.c1);
  const DivisorClass k = canonical_class(s);
  Int v = a.rank * b.rank * (1 - s.genus());
  v -= a.rank * b.c2 + b.rank * a.c2;
  v -= intersect(s, a.c1, b.c1);
  v += a.rank * half_exact(intersect(s, b.c1, b.c1 - k));
  v += b.rank * half_exact(intersect(s, a.c1, a.c1 + k));
  return v;
}

}  // namespace detail

ChernData chern_of_twist(const RuledSurface& s, const ChernData& c, const DivisorClass& line) {
  detail::RawChern t = detail::twist_raw(s, {c.rank, c.c1, c.c2}, line);
  return ChernData(t.rank, std::move(t.c1), t.c2);
}

Int euler_char(const RuledSurface& s, const ChernData& c) {
  check_class(s, c.c1);
  const DivisorClass k = canonical_class(s);
  return c.rank * (1 - s.genus()) + half_exact(intersect(s, c.c1, c.c1 - k)) - c.c2;
}

Int euler_pairing(const RuledSurface& s, const ChernData& a, const ChernData& b) {
  return detail::euler_pairing_raw(s, {a.rank, a.c1, a.c2}, {b.rank, b.c1, b.c2});
}

Int discriminant(const RuledSurface& s, const ChernData& c) {
  check_class(s, c.c1);
  return 2 * c.rank * c.c2 - (c.rank - 1) * intersect(s, c.c1, c.c1);
}

Rational slope(const RuledSurface& s, const DivisorClass& h, const ChernData& c) {
  return Rational(intersect(s, h, c.c1), c.rank);
}

Int stack_dim(const RuledSurface& s, const ChernData& c) {
  return -euler_pairing(s, c, c);
}

ChernData pullback_from_curve(const RuledSurface& s, Int rank, Int degree) {
  if (!s.is_geometrically_ruled())
    throw Error(ErrorCode::UnsupportedSurface,
                "pullback from the base curve needs a geometrically ruled surface");
  if (rank < 1)
    throw Error(ErrorCode::RankTooSmall, "curve bundle needs rank >= 1");
  return ChernData(rank, degree * fiber_class(s), 0);
}

ChernData direct_sum(const RuledSurface& s, const ChernData& a, const ChernData& b) {
  return ChernData(a.rank + b.rank, a.c1 + b.c1,
                   a.c2 + b.c2 + intersect(s, a.c1, b.c1));
}

std::string to_string(const ChernData& c) {
  std::ostringstream os;
  os << "(r=" << c.rank << ", c1=" << to_string(c.c1) << ", c2=" << c.c2 << ")";
  return os.str();
}

}  // namespace ruled
