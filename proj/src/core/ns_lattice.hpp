#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace ruled {

using Int = long long;

/// Integer divisor class in the fixed ordered basis (sigma, f, E_1, ..., E_n)
/// of the surface it lives on.  Pure value type; the coordinate length must
/// equal the Picard rank of that surface.
class DivisorClass {
 public:
  explicit DivisorClass(std::vector<Int> coeffs);
  static DivisorClass zero(std::size_t size);

  std::size_t size() const noexcept { return coeffs_.size(); }
  Int operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<Int> coeffs_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(Int n, const DivisorClass& a);

/// A geometrically ruled surface over a genus-g curve, normalized by a
/// section of self-intersection -e, together with a chain of general-point
/// blowups.  Blowup points are distinct, none infinitely near, none on the
/// section, so the exceptional classes pair to zero with sigma, f and each
/// other.  Immutable; blow_up / blow_down return new values.
class RuledSurface {
 public:
  Int genus() const noexcept { return genus_; }
  Int e_invariant() const noexcept { return e_; }
  Int blowup_count() const noexcept { return blowups_; }
  Int picard_rank() const noexcept { return 2 + blowups_; }
  bool is_geometrically_ruled() const noexcept { return blowups_ == 0; }

  RuledSurface blow_up() const;
  RuledSurface blow_down() const;

  friend bool operator==(const RuledSurface&, const RuledSurface&) = default;
  friend RuledSurface make_geometrically_ruled(Int genus, Int e);

 private:
  RuledSurface(Int genus, Int e, Int blowups)
      : genus_(genus), e_(e), blowups_(blowups) {}

  Int genus_;
  Int e_;
  Int blowups_;
};

/// Geometrically ruled surface with basis (sigma, f), form sigma^2 = -e,
/// sigma.f = 1, f^2 = 0.  Rejects e < 0.
RuledSurface make_geometrically_ruled(Int genus, Int e);

/// Throws DimensionMismatch unless the class has exactly picard_rank coordinates.
void check_class(const RuledSurface& s, const DivisorClass& d);

/// Symmetric bilinear intersection form:
/// (a sigma + b f + sum c_i E_i).(a' sigma + b' f + sum c'_i E_i)
///   = -e a a' + a b' + a' b - sum c_i c'_i.
Int intersect(const RuledSurface& s, const DivisorClass& a, const DivisorClass& b);

/// -2 sigma + (2g-2-e) f on the base, plus +1 on every exceptional class.
DivisorClass canonical_class(const RuledSurface& s);

DivisorClass fiber_class(const RuledSurface& s);
DivisorClass section_class(const RuledSurface& s);
DivisorClass exceptional_class(const RuledSurface& s, Int index);  // 1-based

/// Numeric pushforward along the contraction of the last exceptional class:
/// drops the final coordinate.  Satisfies (push D)^2 = D^2 + (D.E_n)^2.
DivisorClass pushforward_class(const RuledSurface& s, const DivisorClass& d);

/// Numeric pullback to the blowup: appends a zero coordinate.
DivisorClass pullback_class(const DivisorClass& d);

std::string to_string(const DivisorClass& d);

}  // namespace ruled
