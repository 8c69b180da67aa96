#include "core/reduction.hpp"

#include <utility>

#include "core/intmath.hpp"
#include "core/polarization.hpp"

namespace ruled {

namespace {

// A = pullback of the direct image: rank r-d, degree k on the base curve.
detail::RawChern base_case_a(const RuledSurface& s, Int rank, Int degree) {
  return {rank, degree * fiber_class(s), 0};
}

// B = pullback of the quotient side twisted by the relative cotangent class
// -sigma - e f.  The twist formula is the universal Chern-character one and
// stays valid at rank 0 (d = 0), where it yields (0, l f, l).
detail::RawChern base_case_b(const RuledSurface& s, Int rank, Int degree) {
  const DivisorClass omega =
      -section_class(s) + (-s.e_invariant()) * fiber_class(s);
  return detail::twist_raw(s, {rank, degree * fiber_class(s), 0}, omega);
}

void push_audit(std::vector<AuditEntry>& out, std::size_t step, const char* name,
                Int expected, Int actual) {
  AuditEntry e{step, name, expected, actual, expected == actual, {}};
  out.push_back(std::move(e));
}

}  // namespace

TwistResult normalize_twist(const RuledSurface& s, const ChernData& c, TwistDirection dir) {
  check_class(s, c.c1);
  const Int r = c.rank;
  Int amount = 0;
  DivisorClass twist_class = DivisorClass::zero(c.c1.size());
  if (dir == TwistDirection::Fiber) {
    if (!s.is_geometrically_ruled())
      throw Error(ErrorCode::Direction,
                  "fiber normalization runs on the geometrically ruled base");
    const Int d = -intersect(s, c.c1, fiber_class(s));
    amount = detail::floordiv(d, r);  // d' = d - r n lands in [0, r)
    twist_class = amount * section_class(s);
  } else {
    if (s.blowup_count() == 0)
      throw Error(ErrorCode::Direction, "no exceptional class to normalize against");
    const DivisorClass e_last = exceptional_class(s, s.blowup_count());
    const Int d = -intersect(s, c.c1, e_last);
    amount = -detail::floordiv(d, r);  // d' = d + r n lands in [0, r)
    twist_class = amount * e_last;
  }
  ChernData out = chern_of_twist(s, c, twist_class);
  const DivisorClass probe = dir == TwistDirection::Fiber
                                 ? fiber_class(s)
                                 : exceptional_class(s, s.blowup_count());
  const Int d_after = -intersect(s, out.c1, probe);
  if (d_after < 0 || d_after >= r)
    throw Error(ErrorCode::Internal, "twist normalization missed the window [0, r)");
  return {amount, std::move(out)};
}

BlowdownResult blowdown_step(const RuledSurface& s, const ChernData& c) {
  if (s.blowup_count() == 0)
    throw Error(ErrorCode::NoBlowdown, "surface is geometrically ruled; nothing to contract");
  check_class(s, c.c1);
  const Int r = c.rank;
  const Int d = -intersect(s, c.c1, exceptional_class(s, s.blowup_count()));
  if (d < 0 || d >= r)
    throw Error(ErrorCode::NotNormalized,
                "exceptional degree " + std::to_string(d) +
                    " must satisfy 0 <= d < rank before contracting");
  ChernData data(r, pushforward_class(s, c.c1), c.c2 + d * (d - 1) / 2);
  return {s.blow_down(), std::move(data), d * (r - d)};
}

BaseCaseData base_case_data(const RuledSurface& s, const ChernData& c) {
  if (!s.is_geometrically_ruled())
    throw Error(ErrorCode::Direction, "base-case data needs the geometrically ruled base");
  check_class(s, c.c1);
  const Int r = c.rank;
  const Int d = -intersect(s, c.c1, fiber_class(s));
  if (d < 0 || d >= r)
    throw Error(ErrorCode::NotNormalized,
                "fiber degree must be normalized to 0 <= d < rank");
  const Int g = s.genus();
  const Int chi = euler_char(s, c);
  BaseCaseData out;
  out.d = d;
  out.k_rank = r - d;
  out.k_deg = chi + (r - d) * (g - 1);
  out.l_rank = d;
  out.l_deg = -chi + intersect(s, c.c1, section_class(s)) - (r - d) * (g - 1);
  out.ext_dim_b_to_a = -detail::euler_pairing_raw(
      s, base_case_b(s, out.l_rank, out.l_deg), base_case_a(s, out.k_rank, out.k_deg));
  return out;
}

ReductionTrace run_reduction(const RuledSurface& s0, const ChernData& c0) {
  if (c0.rank < 2)
    throw Error(ErrorCode::RankTooSmall, "reduction needs rank >= 2");
  check_class(s0, c0.c1);

  ReductionTrace trace;
  trace.surfaces.push_back(s0);

  RuledSurface s = s0;
  ChernData c = c0;
  std::size_t sidx = 0;

  while (s.blowup_count() > 0) {
    TwistResult tw = normalize_twist(s, c, TwistDirection::ExceptionalLast);
    const Int d = -intersect(s, tw.data.c1, exceptional_class(s, s.blowup_count()));
    trace.steps.push_back({StepKind::TwistExceptional, tw.amount, d, 0, c, tw.data, sidx});
    c = std::move(tw.data);

    BlowdownResult bd = blowdown_step(s, c);
    trace.steps.push_back({StepKind::Blowdown, 0, d, bd.fiber_dim, c, bd.data, sidx});
    s = bd.surface;
    c = std::move(bd.data);
    trace.surfaces.push_back(s);
    ++sidx;
  }

  TwistResult tw = normalize_twist(s, c, TwistDirection::Fiber);
  const Int d = -intersect(s, tw.data.c1, fiber_class(s));
  trace.steps.push_back({StepKind::TwistFiber, tw.amount, d, 0, c, tw.data, sidx});
  c = std::move(tw.data);

  trace.base = base_case_data(s, c);
  trace.steps.push_back({StepKind::BaseCase, 0, trace.base.d, 0, c, c, sidx});
  return trace;
}

std::vector<AuditEntry> audit_dimensions(const ReductionTrace& trace) {
  if (trace.steps.empty() || trace.steps.back().kind != StepKind::BaseCase)
    throw Error(ErrorCode::Argument, "trace is incomplete; run_reduction produces complete traces");

  std::vector<AuditEntry> out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& st = trace.steps[i];
    const RuledSurface& s = trace.surfaces.at(st.surface_index);
    switch (st.kind) {
      case StepKind::TwistFiber:
      case StepKind::TwistExceptional:
        push_audit(out, i, "twist-stack-dim", stack_dim(s, st.before), stack_dim(s, st.after));
        push_audit(out, i, "twist-discriminant", discriminant(s, st.before),
                   discriminant(s, st.after));
        break;
      case StepKind::Blowdown: {
        const RuledSurface& s1 = trace.surfaces.at(st.surface_index + 1);
        push_audit(out, i, "blowdown-dimension", stack_dim(s, st.before),
                   stack_dim(s1, st.after) + st.fiber_dim);
        break;
      }
      case StepKind::BaseCase: {
        const Int g = s.genus();
        const Int r = st.after.rank;
        const Int d = trace.base.d;
        const detail::RawChern a = base_case_a(s, trace.base.k_rank, trace.base.k_deg);
        const detail::RawChern b = base_case_b(s, trace.base.l_rank, trace.base.l_deg);
        const Int t1 = (r - d) * (r - d) * (g - 1);
        const Int t2 = d * d * (g - 1);
        const Int t3 = -detail::euler_pairing_raw(s, b, a);
        AuditEntry e{i, "base-case-dimension", stack_dim(s, st.after), t1 + t2 + t3,
                     false, {t1, t2, t3}};
        e.pass = e.expected == e.actual;
        out.push_back(std::move(e));
        push_audit(out, i, "chi-A-B-zero", 0, detail::euler_pairing_raw(s, a, b));
        break;
      }
    }
  }
  return out;
}

ModuliDims moduli_dims(const RuledSurface& s, const ChernData& c) {
  if (c.rank < 2)
    throw Error(ErrorCode::RankTooSmall, "moduli dimensions need rank >= 2");
  ModuliDims out;
  out.dim_stable_moduli = stack_dim(s, c) + 1;  // stable sheaves are simple
  out.m = out.dim_stable_moduli - 2 * s.genus();
  out.unirational = s.genus() == 0;
  return out;
}

Int moduli_m_closed_form(const RuledSurface& s, const ChernData& c) {
  if (c.rank < 2)
    throw Error(ErrorCode::RankTooSmall, "moduli dimensions need rank >= 2");
  const Int r = c.rank;
  const Int g = s.genus();
  return 2 * r * c.c2 - (r - 1) * intersect(s, c.c1, c.c1) + (r * r - 2) * g - r * r + 1;
}

Int semistable_prioritary_gap(const RuledSurface& s, const DivisorClass& h) {
  return hypothesis_value(s, h);
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::TwistFiber:
      return "twist-fiber";
    case StepKind::TwistExceptional:
      return "twist-exceptional";
    case StepKind::Blowdown:
      return "blowdown";
    case StepKind::BaseCase:
      return "base-case";
  }
  return "?";
}

}  // namespace ruled
