#pragma once

#include <string>

#include <boost/rational.hpp>

#include "core/ns_lattice.hpp"

namespace ruled {

using Rational = boost::rational<Int>;

/// Rank and Chern classes of a sheaf class.  rank >= 1; the c1 coordinate
/// length must match the owning surface.
struct ChernData {
  ChernData(Int rank_in, DivisorClass c1_in, Int c2_in)
      : rank(rank_in), c1(std::move(c1_in)), c2(c2_in) {
    if (rank < 1)
      throw Error(ErrorCode::RankTooSmall, "sheaf class needs rank >= 1");
  }

  Int rank;
  DivisorClass c1;
  Int c2;

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Chern data of the twist by a line bundle class L:
/// c1' = c1 + r L,  c2' = c2 + (r-1) L.c1 + r(r-1)/2 L^2.
ChernData chern_of_twist(const RuledSurface& s, const ChernData& c, const DivisorClass& line);

/// Riemann-Roch: chi = r (1-g) + c1.(c1 - K)/2 - c2.  The halving is checked
/// to be exact.
Int euler_char(const RuledSurface& s, const ChernData& c);

/// chi(a, b) = sum (-1)^i dim Ext^i, computed from ch(a)^dual . ch(b) . td(S):
/// chi(a,b) = r_a r_b (1-g) - r_a c2_b - r_b c2_a - c1_a.c1_b
///            + r_a c1_b.(c1_b - K)/2 + r_b c1_a.(c1_a + K)/2.
Int euler_pairing(const RuledSurface& s, const ChernData& a, const ChernData& b);

/// Delta = 2 r c2 - (r-1) c1^2; invariant under twists.
Int discriminant(const RuledSurface& s, const ChernData& c);

/// mu_H = (H.c1)/r as an exact rational.
Rational slope(const RuledSurface& s, const DivisorClass& h, const ChernData& c);

/// -chi(E,E) = Delta - r^2 (1-g); may be negative.
Int stack_dim(const RuledSurface& s, const ChernData& c);

/// Chern data (n, k f, 0) of the pullback of a rank-n degree-k bundle on the
/// base curve.  Geometrically ruled surfaces only.
ChernData pullback_from_curve(const RuledSurface& s, Int rank, Int degree);

/// Chern data of a direct sum: (r_a + r_b, c1_a + c1_b, c2_a + c2_b + c1_a.c1_b).
ChernData direct_sum(const RuledSurface& s, const ChernData& a, const ChernData& b);

std::string to_string(const ChernData& c);

namespace detail {

// Unvalidated triple; rank 0 is allowed here (torsion classes showing up in
// the base-case audits).
struct RawChern {
  Int rank;
  DivisorClass c1;
  Int c2;
};

RawChern twist_raw(const RuledSurface& s, const RawChern& c, const DivisorClass& line);
Int euler_pairing_raw(const RuledSurface& s, const RawChern& a, const RawChern& b);

}  // namespace detail

}  // namespace ruled
