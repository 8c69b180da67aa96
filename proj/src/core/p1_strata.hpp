#pragma once

#include <string>
#include <vector>

#include "core/ns_lattice.hpp"

namespace ruled {

/// Splitting data of a coherent sheaf on P^1: the splitting type of the
/// locally free part (weakly decreasing) plus a number of distinct reduced
/// torsion points.  rank = number of parts, degree = sum(parts) + torsion.
struct SplittingType {
  std::vector<Int> parts;
  Int torsion_points = 0;

  Int rank() const { return static_cast<Int>(parts.size()); }
  Int degree() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// All splitting types of the given rank and total degree with parts
/// >= min_part, torsion slices t = 0 .. degree - rank*min_part, ordered by
/// t then lexicographically ascending on the parts.  Empty result is valid.
std::vector<SplittingType> enumerate_splitting_types(Int rank, Int degree, Int min_part);

/// Codimension of the stratum, defined as dim Ext^1(F,F):
/// sum over ordered pairs of max(0, a_i - a_j - 1) for the locally free part,
/// plus t (rank + 1) for t reduced torsion points.
Int stratum_codim(const SplittingType& s);

struct StrataRow {
  SplittingType type;
  Int codim = 0;
  std::string role;  // "generic", "codim-1", "offender"
};

struct StrataReport {
  Int rank = 0;
  Int d = 0;
  Int min_part = 0;
  bool pass = false;
  std::vector<StrataRow> special;    // the expected codim-0 / codim-1 types
  std::vector<StrataRow> offenders;  // any other type below codimension 2
  Int total_types = 0;
  Int other_min_codim = -1;  // -1 when no non-special types were enumerated
};

/// Checks the stratification of rank-r degree-(-d) sheaves on P^1 within the
/// window: the generic type has codimension 0, for d = 0 the type
/// (1, 0^{r-2}, -1) has codimension exactly 1, and every other enumerated
/// type has codimension at least 2.
StrataReport verify_strata(Int rank, Int d, Int min_part);

std::string to_string(const SplittingType& s);

}  // namespace ruled
