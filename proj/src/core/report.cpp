#include "core/report.hpp"

#include <sstream>

#include "json.hpp"

#include "core/config.hpp"
#include "core/p1_strata.hpp"
#include "core/polarization.hpp"
#include "core/reduction.hpp"

namespace ruled {

namespace {

using nlohmann::json;

constexpr const char* kMNote =
    "the quadratic term of m is (r-1)*c1^2; the closed form is cross-checked "
    "against the stack-dimension route";

struct Polarized {
  DivisorClass h;
  bool automatic = false;
  AmpleVerdict verdict = AmpleVerdict::NotAmple;
  Int condition = 0;
  bool satisfied = false;
};

Polarized polarize(const Config& cfg) {
  Polarized p{cfg.polarization ? *cfg.polarization
                               : construct_good_polarization(cfg.surface),
              !cfg.polarization.has_value()};
  p.verdict = is_ample(cfg.surface, p.h);
  p.condition = hypothesis_value(cfg.surface, p.h);
  p.satisfied = p.condition < 0 && p.verdict != AmpleVerdict::NotAmple;
  return p;
}

bool all_pass(const std::vector<AuditEntry>& audits) {
  for (const AuditEntry& a : audits)
    if (!a.pass) return false;
  return true;
}

json chern_json(const ChernData& c) {
  return json{{"rank", c.rank}, {"c1", c.c1.coeffs()}, {"c2", c.c2}};
}

void write_surface_text(std::ostream& os, const Config& cfg) {
  const RuledSurface& s = cfg.surface;
  os << "== Surface ==\n"
     << "genus: " << s.genus() << "\n"
     << "e: " << s.e_invariant() << "\n"
     << "blowups: " << s.blowup_count() << "\n"
     << "picard_rank: " << s.picard_rank() << "\n"
     << "canonical_class: " << to_string(canonical_class(s)) << "\n"
     << "fiber_class: " << to_string(fiber_class(s)) << "\n"
     << "sheaf: " << to_string(cfg.sheaf) << "\n";
}

void write_surface_json(std::ostream& os, const Config& cfg) {
  const RuledSurface& s = cfg.surface;
  os << json{{"record", "surface"},
             {"genus", s.genus()},
             {"e", s.e_invariant()},
             {"blowups", s.blowup_count()},
             {"picard_rank", s.picard_rank()},
             {"canonical_class", canonical_class(s).coeffs()},
             {"fiber_class", fiber_class(s).coeffs()},
             {"sheaf", chern_json(cfg.sheaf)}}
            .dump()
     << "\n";
}

void write_polarization_text(std::ostream& os, const Polarized& p) {
  os << "\n== Polarization ==\n"
     << "H: " << to_string(p.h) << (p.automatic ? " (auto)" : " (config)") << "\n"
     << "ample: " << to_string(p.verdict) << "\n";
}

void write_hypothesis_text(std::ostream& os, const Polarized& p) {
  os << "\n== Hypothesis H.(K_S+f) ==\n";
  if (p.condition < 0)
    os << "H.(K_S+f) = " << p.condition << " < 0: satisfied\n";
  else
    os << "H.(K_S+f) = " << p.condition
       << " >= 0: NOT satisfied (semistable sheaves need not be prioritary)\n";
  if (p.verdict == AmpleVerdict::NotAmple)
    os << "warning: H fails the ampleness checks; the hypothesis needs an ample H\n";
}

void write_polarization_json(std::ostream& os, const Polarized& p) {
  os << json{{"record", "polarization"},
             {"H", p.h.coeffs()},
             {"source", p.automatic ? "auto" : "config"},
             {"verdict", to_string(p.verdict)},
             {"condition", p.condition},
             {"satisfied", p.satisfied}}
            .dump()
     << "\n";
}

void write_trace_text(std::ostream& os, const ReductionTrace& trace) {
  os << "\n== Reduction Trace ==\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& st = trace.steps[i];
    os << "step " << i << ": " << to_string(st.kind) << " n=" << st.twist_amount
       << " d=" << st.d << " fiber_dim=" << st.fiber_dim << " " << to_string(st.before)
       << " -> " << to_string(st.after) << "\n";
  }
}

void write_trace_json(std::ostream& os, const ReductionTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& st = trace.steps[i];
    os << json{{"record", "step"},
               {"index", i},
               {"kind", to_string(st.kind)},
               {"twist_amount", st.twist_amount},
               {"d", st.d},
               {"fiber_dim", st.fiber_dim},
               {"surface_blowups", trace.surfaces.at(st.surface_index).blowup_count()},
               {"before", chern_json(st.before)},
               {"after", chern_json(st.after)}}
              .dump()
       << "\n";
  }
}

void write_base_text(std::ostream& os, const BaseCaseData& b) {
  os << "\n== Base Case ==\n"
     << "d=" << b.d << " k=" << b.k_deg << " l=" << b.l_deg << "\n"
     << "K: rank " << b.k_rank << ", degree " << b.k_deg << "\n"
     << "L: rank " << b.l_rank << ", degree " << b.l_deg << "\n"
     << "ext_dim_B_to_A: " << b.ext_dim_b_to_a << "\n";
}

void write_base_json(std::ostream& os, const BaseCaseData& b) {
  os << json{{"record", "base_case"},
             {"d", b.d},
             {"K_rank", b.k_rank},
             {"K_deg", b.k_deg},
             {"L_rank", b.l_rank},
             {"L_deg", b.l_deg},
             {"ext_dim_B_to_A", b.ext_dim_b_to_a}}
            .dump()
     << "\n";
}

void write_audits_text(std::ostream& os, const std::vector<AuditEntry>& audits) {
  os << "\n== Dimension Audits ==\n";
  std::size_t passed = 0;
  for (const AuditEntry& a : audits) {
    os << "step " << a.step_index << " " << a.name << ": " << a.expected << " = "
       << a.actual;
    if (a.terms.size() == 3)
      os << " [(r-d)^2(g-1) = " << a.terms[0] << ", d^2(g-1) = " << a.terms[1]
         << ", -chi(B,A) = " << a.terms[2] << "]";
    os << (a.pass ? " PASS" : " FAIL") << "\n";
    if (a.pass) ++passed;
  }
  os << "audits: " << passed << "/" << audits.size() << " passed\n";
}

void write_audits_json(std::ostream& os, const std::vector<AuditEntry>& audits) {
  for (const AuditEntry& a : audits) {
    json rec{{"record", "audit"},
             {"step", a.step_index},
             {"name", a.name},
             {"expected", a.expected},
             {"actual", a.actual},
             {"pass", a.pass}};
    if (!a.terms.empty()) rec["terms"] = a.terms;
    os << rec.dump() << "\n";
  }
}

void write_moduli_text(std::ostream& os, const RuledSurface& s, const ChernData& c) {
  const ModuliDims md = moduli_dims(s, c);
  const Int m2 = moduli_m_closed_form(s, c);
  os << "\n== Moduli ==\n"
     << "stack_dim: " << stack_dim(s, c) << "\n"
     << "dim_stable_moduli: " << md.dim_stable_moduli << "\n"
     << "m: " << md.m << "\n"
     << "m_closed_form: " << m2 << (m2 == md.m ? " (agree)" : " (DISAGREE)") << "\n"
     << "unirational: " << (md.unirational ? "yes" : "no") << " (g = " << s.genus()
     << ")\n"
     << "note: " << kMNote << ".\n";
}

void write_moduli_json(std::ostream& os, const RuledSurface& s, const ChernData& c) {
  const ModuliDims md = moduli_dims(s, c);
  const Int m2 = moduli_m_closed_form(s, c);
  os << json{{"record", "moduli"},
             {"stack_dim", stack_dim(s, c)},
             {"dim_stable_moduli", md.dim_stable_moduli},
             {"m", md.m},
             {"m_closed_form", m2},
             {"routes_agree", m2 == md.m},
             {"unirational", md.unirational},
             {"m_note", kMNote}}
            .dump()
     << "\n";
}

void write_summary_json(std::ostream& os, int exit_code, bool hypothesis_ok, bool audits_ok) {
  os << json{{"record", "summary"},
             {"exit_code", exit_code},
             {"hypothesis_satisfied", hypothesis_ok},
             {"audits_passed", audits_ok}}
            .dump()
     << "\n";
}

CommandResult input_error(const Error& e) {
  return {kExitInputError, std::string("error: ") + e.what() + "\n"};
}

}  // namespace

CommandResult cmd_surface_check(std::string_view config_text) {
  try {
    const Config cfg = parse_config(config_text);
    std::ostringstream os;
    write_surface_text(os, cfg);
    os << "polarization: "
       << (cfg.polarization ? to_string(*cfg.polarization) : std::string("auto")) << "\n"
       << "config ok\n";
    return {kExitOk, os.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CommandResult cmd_polarize(std::string_view config_text) {
  try {
    const Config cfg = parse_config(config_text);
    const Polarized p = polarize(cfg);
    std::ostringstream os;
    write_surface_text(os, cfg);
    write_polarization_text(os, p);
    write_hypothesis_text(os, p);
    return {p.satisfied ? kExitOk : kExitHypothesisFailed, os.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CommandResult cmd_reduce(std::string_view config_text, Format fmt) {
  try {
    const Config cfg = parse_config(config_text);
    const ReductionTrace trace = run_reduction(cfg.surface, cfg.sheaf);
    const std::vector<AuditEntry> audits = audit_dimensions(trace);
    const bool audits_ok = all_pass(audits);
    const int exit_code = audits_ok ? kExitOk : kExitAuditFailed;
    std::ostringstream os;
    if (fmt == Format::Text) {
      write_surface_text(os, cfg);
      write_trace_text(os, trace);
      write_base_text(os, trace.base);
      write_audits_text(os, audits);
      write_moduli_text(os, cfg.surface, cfg.sheaf);
    } else {
      write_surface_json(os, cfg);
      write_trace_json(os, trace);
      write_base_json(os, trace.base);
      write_audits_json(os, audits);
      write_moduli_json(os, cfg.surface, cfg.sheaf);
      write_summary_json(os, exit_code, true, audits_ok);
    }
    return {exit_code, os.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CommandResult cmd_report(std::string_view config_text, Format fmt) {
  try {
    const Config cfg = parse_config(config_text);
    const Polarized p = polarize(cfg);
    const ReductionTrace trace = run_reduction(cfg.surface, cfg.sheaf);
    const std::vector<AuditEntry> audits = audit_dimensions(trace);
    const bool audits_ok = all_pass(audits);
    const int exit_code = !audits_ok ? kExitAuditFailed
                          : !p.satisfied ? kExitHypothesisFailed
                                         : kExitOk;
    std::ostringstream os;
    if (fmt == Format::Text) {
      write_surface_text(os, cfg);
      write_polarization_text(os, p);
      write_hypothesis_text(os, p);
      write_trace_text(os, trace);
      write_base_text(os, trace.base);
      write_audits_text(os, audits);
      write_moduli_text(os, cfg.surface, cfg.sheaf);
    } else {
      write_surface_json(os, cfg);
      write_polarization_json(os, p);
      write_trace_json(os, trace);
      write_base_json(os, trace.base);
      write_audits_json(os, audits);
      write_moduli_json(os, cfg.surface, cfg.sheaf);
      write_summary_json(os, exit_code, p.satisfied, audits_ok);
    }
    return {exit_code, os.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CommandResult cmd_strata(Int rank, Int d, Int min_part, Format fmt) {
  try {
    const StrataReport rep = verify_strata(rank, d, min_part);
    const int exit_code = rep.pass ? kExitOk : kExitAuditFailed;
    std::ostringstream os;
    if (fmt == Format::Text) {
      os << "== Splitting-Type Strata ==\n"
         << "rank: " << rep.rank << "  d: " << rep.d << "  min_part: " << rep.min_part
         << "\n";
      for (const StrataRow& row : rep.special)
        os << to_string(row.type) << " t=" << row.type.torsion_points << ": codim "
           << row.codim << " [" << row.role << "]\n";
      for (const StrataRow& row : rep.offenders)
        os << to_string(row.type) << " t=" << row.type.torsion_points << ": codim "
           << row.codim << " [OFFENDER: expected >= 2]\n";
      const Int others =
          rep.total_types - static_cast<Int>(rep.special.size());
      os << "other types: " << others;
      if (rep.other_min_codim >= 0) os << ", min codim " << rep.other_min_codim;
      os << "\n"
         << "stratification check: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    } else {
      os << json{{"record", "strata_header"},
                 {"rank", rep.rank},
                 {"d", rep.d},
                 {"min_part", rep.min_part}}
                .dump()
         << "\n";
      const auto row_json = [&os](const StrataRow& row) {
        os << json{{"record", "stratum"},
                   {"parts", row.type.parts},
                   {"torsion_points", row.type.torsion_points},
                   {"codim", row.codim},
                   {"role", row.role}}
                  .dump()
           << "\n";
      };
      for (const StrataRow& row : rep.special) row_json(row);
      for (const StrataRow& row : rep.offenders) row_json(row);
      os << json{{"record", "strata_summary"},
                 {"pass", rep.pass},
                 {"total_types", rep.total_types},
                 {"other_min_codim", rep.other_min_codim},
                 {"offenders", rep.offenders.size()}}
                .dump()
         << "\n";
    }
    return {exit_code, os.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

}  // namespace ruled
