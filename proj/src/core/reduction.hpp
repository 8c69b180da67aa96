#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/sheaf_invariants.hpp"

namespace ruled {

enum class TwistDirection { Fiber, ExceptionalLast };
enum class StepKind { TwistFiber, TwistExceptional, Blowdown, BaseCase };

struct TwistResult {
  Int amount;
  ChernData data;
};

struct BlowdownResult {
  RuledSurface surface;
  ChernData data;
  Int fiber_dim;
};

struct ReductionStep {
  StepKind kind;
  Int twist_amount = 0;
  Int d = 0;                      // normalized 0 <= d < r used by the step
  Int fiber_dim = 0;              // d(r-d) for blowdown steps, else 0
  ChernData before;
  ChernData after;
  std::size_t surface_index = 0;  // into ReductionTrace::surfaces
};

struct BaseCaseData {
  Int d = 0;
  Int k_rank = 0;  // direct image on the base curve: rank r-d, degree k
  Int k_deg = 0;
  Int l_rank = 0;  // quotient side: rank d, degree l
  Int l_deg = 0;
  Int ext_dim_b_to_a = 0;  // -chi(B, A), signed; feeds the base-case audit
};

struct AuditEntry {
  std::size_t step_index = 0;
  std::string name;
  Int expected = 0;
  Int actual = 0;
  bool pass = false;
  std::vector<Int> terms;  // breakdown, used by the base-case entry
};

struct ReductionTrace {
  std::vector<RuledSurface> surfaces;  // front() = input surface, back() = base
  std::vector<ReductionStep> steps;    // last step is always the base case
  BaseCaseData base;
};

/// Twist by n sigma (fiber direction, geometrically ruled base only) or by
/// n E_last so that the relevant degree d lands in [0, r).  n is unique.
TwistResult normalize_twist(const RuledSurface& s, const ChernData& c, TwistDirection dir);

/// Contract the last exceptional class: Chern data moves to
/// (r, pushforward(c1), c2 + d(d-1)/2) and the step contributes a
/// d(r-d)-dimensional fiber.  Requires 0 <= d = -c1.E_last < r.
BlowdownResult blowdown_step(const RuledSurface& s, const ChernData& c);

/// On the geometrically ruled base with fiber-normalized data:
/// d = -c1.f, k = chi + (r-d)(g-1), l = -chi + c1.sigma - (r-d)(g-1).
BaseCaseData base_case_data(const RuledSurface& s, const ChernData& c);

/// Alternate exceptional normalization and blowdown until geometrically
/// ruled, then fiber-normalize and extract the base-case data.  Every step is
/// recorded; requires rank >= 2.
ReductionTrace run_reduction(const RuledSurface& s, const ChernData& c);

/// Exact dimension checks over a completed trace: twists preserve stack_dim
/// and discriminant, each blowdown satisfies
/// stack_dim(S) = stack_dim(S1) + d(r-d), and the base case satisfies
/// stack_dim = (r-d)^2(g-1) + d^2(g-1) - chi(B,A) with chi(A,B) = 0 checked
/// separately.
std::vector<AuditEntry> audit_dimensions(const ReductionTrace& trace);

struct ModuliDims {
  Int dim_stable_moduli = 0;  // stack_dim + 1
  Int m = 0;                  // dim_stable_moduli - 2g
  bool unirational = false;   // g == 0
};

ModuliDims moduli_dims(const RuledSurface& s, const ChernData& c);

/// 2 r c2 - (r-1) c1^2 + (r^2-2) g - r^2 + 1, with the quadratic c1^2 reading
/// of the (r-1) term; agrees with moduli_dims().m.
Int moduli_m_closed_form(const RuledSurface& s, const ChernData& c);

/// H.(K_S+f); a negative value certifies that semistable sheaf classes are
/// prioritary.  Same integer as polarization's hypothesis_value.
Int semistable_prioritary_gap(const RuledSurface& s, const DivisorClass& h);

const char* to_string(StepKind k);

}  // namespace ruled
