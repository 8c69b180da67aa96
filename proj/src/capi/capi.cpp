#include "ruled/ruled.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/p1_strata.hpp"
#include "core/polarization.hpp"
#include "core/reduction.hpp"
#include "core/report.hpp"
#include "core/sheaf_invariants.hpp"

struct ruled_surface {
  ruled::RuledSurface impl;
};

namespace {

ruled_status map_code(ruled::ErrorCode code) {
  using ruled::ErrorCode;
  switch (code) {
    case ErrorCode::UnsupportedSurface:
      return RULED_ERR_UNSUPPORTED_SURFACE;
    case ErrorCode::DimensionMismatch:
      return RULED_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NoBlowdown:
      return RULED_ERR_NO_BLOWDOWN;
    case ErrorCode::NotNormalized:
      return RULED_ERR_NOT_NORMALIZED;
    case ErrorCode::RankTooSmall:
      return RULED_ERR_RANK;
    case ErrorCode::Window:
      return RULED_ERR_WINDOW;
    case ErrorCode::Parse:
      return RULED_ERR_PARSE;
    case ErrorCode::Direction:
      return RULED_ERR_DIRECTION;
    case ErrorCode::Argument:
      return RULED_ERR_ARGUMENT;
    case ErrorCode::Internal:
      return RULED_ERR_INTERNAL;
  }
  return RULED_ERR_INTERNAL;
}

template <typename Fn>
ruled_status wrap(Fn&& fn) {
  try {
    fn();
    return RULED_OK;
  } catch (const ruled::Error& e) {
    return map_code(e.code());
  } catch (...) {
    return RULED_ERR_INTERNAL;
  }
}

ruled::DivisorClass make_class(const long long* data, size_t len) {
  if (data == nullptr)
    throw ruled::Error(ruled::ErrorCode::Argument, "null coordinate array");
  return ruled::DivisorClass(std::vector<ruled::Int>(data, data + len));
}

ruled::ChernData make_chern(ruled_chern_view v) {
  return ruled::ChernData(v.rank, make_class(v.c1, v.c1_len), v.c2);
}

void require(bool ok, const char* what) {
  if (!ok) throw ruled::Error(ruled::ErrorCode::Argument, what);
}

void copy_out(const ruled::DivisorClass& d, long long* out, size_t out_len) {
  require(out != nullptr, "null output array");
  if (out_len != d.size())
    throw ruled::Error(ruled::ErrorCode::DimensionMismatch,
                       "output array has the wrong length");
  std::memcpy(out, d.coeffs().data(), d.size() * sizeof(long long));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr)
    throw ruled::Error(ruled::ErrorCode::Internal, "allocation failed");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ruled::Format to_format(ruled_format f) {
  return f == RULED_FORMAT_JSON_LINES ? ruled::Format::JsonLines : ruled::Format::Text;
}

ruled_status run_command(ruled::CommandResult result, char** out, int* exit_code) {
  require(out != nullptr && exit_code != nullptr, "null output pointer");
  *out = dup_string(result.output);
  *exit_code = result.exit_code;
  return RULED_OK;
}

}  // namespace

extern "C" {

const char* ruled_version(void) { return "1.0.0"; }

const char* ruled_status_str(ruled_status status) {
  switch (status) {
    case RULED_OK:
      return "ok";
    case RULED_ERR_UNSUPPORTED_SURFACE:
      return "unsupported surface";
    case RULED_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case RULED_ERR_NO_BLOWDOWN:
      return "no blowdown available";
    case RULED_ERR_NOT_NORMALIZED:
      return "data not normalized";
    case RULED_ERR_RANK:
      return "rank too small";
    case RULED_ERR_WINDOW:
      return "enumeration window too small";
    case RULED_ERR_PARSE:
      return "config parse error";
    case RULED_ERR_DIRECTION:
      return "twist direction mismatch";
    case RULED_ERR_ARGUMENT:
      return "invalid argument";
    case RULED_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

ruled_status ruled_surface_create(long long genus, long long e, long long blowups,
                                  ruled_surface** out) {
  return wrap([&] {
    require(out != nullptr, "null output pointer");
    require(blowups >= 0, "blowup count must be nonnegative");
    ruled::RuledSurface s = ruled::make_geometrically_ruled(genus, e);
    for (long long i = 0; i < blowups; ++i) s = s.blow_up();
    *out = new ruled_surface{std::move(s)};
  });
}

ruled_status ruled_surface_blow_up(const ruled_surface* s, ruled_surface** out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = new ruled_surface{s->impl.blow_up()};
  });
}

ruled_status ruled_surface_blow_down(const ruled_surface* s, ruled_surface** out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = new ruled_surface{s->impl.blow_down()};
  });
}

void ruled_surface_free(ruled_surface* s) { delete s; }

long long ruled_surface_genus(const ruled_surface* s) {
  return s ? s->impl.genus() : -1;
}

long long ruled_surface_e_invariant(const ruled_surface* s) {
  return s ? s->impl.e_invariant() : -1;
}

long long ruled_surface_blowup_count(const ruled_surface* s) {
  return s ? s->impl.blowup_count() : -1;
}

long long ruled_surface_picard_rank(const ruled_surface* s) {
  return s ? s->impl.picard_rank() : -1;
}

ruled_status ruled_intersect(const ruled_surface* s, const long long* a, size_t a_len,
                             const long long* b, size_t b_len, long long* out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = ruled::intersect(s->impl, make_class(a, a_len), make_class(b, b_len));
  });
}

ruled_status ruled_canonical_class(const ruled_surface* s, long long* out, size_t out_len) {
  return wrap([&] {
    require(s != nullptr, "null surface");
    copy_out(ruled::canonical_class(s->impl), out, out_len);
  });
}

ruled_status ruled_fiber_class(const ruled_surface* s, long long* out, size_t out_len) {
  return wrap([&] {
    require(s != nullptr, "null surface");
    copy_out(ruled::fiber_class(s->impl), out, out_len);
  });
}

ruled_status ruled_section_class(const ruled_surface* s, long long* out, size_t out_len) {
  return wrap([&] {
    require(s != nullptr, "null surface");
    copy_out(ruled::section_class(s->impl), out, out_len);
  });
}

ruled_status ruled_pushforward_class(const ruled_surface* s, const long long* d,
                                     size_t d_len, long long* out, size_t out_len) {
  return wrap([&] {
    require(s != nullptr, "null surface");
    copy_out(ruled::pushforward_class(s->impl, make_class(d, d_len)), out, out_len);
  });
}

ruled_status ruled_pullback_class(const long long* d, size_t d_len, long long* out,
                                  size_t out_len) {
  return wrap([&] { copy_out(ruled::pullback_class(make_class(d, d_len)), out, out_len); });
}

ruled_status ruled_chern_of_twist(const ruled_surface* s, ruled_chern_view c,
                                  const long long* line, size_t line_len,
                                  long long* c1_out, size_t c1_out_len, long long* c2_out) {
  return wrap([&] {
    require(s != nullptr && c2_out != nullptr, "null pointer");
    const ruled::ChernData twisted =
        ruled::chern_of_twist(s->impl, make_chern(c), make_class(line, line_len));
    copy_out(twisted.c1, c1_out, c1_out_len);
    *c2_out = twisted.c2;
  });
}

ruled_status ruled_euler_char(const ruled_surface* s, ruled_chern_view c, long long* out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = ruled::euler_char(s->impl, make_chern(c));
  });
}

ruled_status ruled_euler_pairing(const ruled_surface* s, ruled_chern_view a,
                                 ruled_chern_view b, long long* out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = ruled::euler_pairing(s->impl, make_chern(a), make_chern(b));
  });
}

ruled_status ruled_discriminant(const ruled_surface* s, ruled_chern_view c, long long* out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = ruled::discriminant(s->impl, make_chern(c));
  });
}

ruled_status ruled_slope(const ruled_surface* s, const long long* h, size_t h_len,
                         ruled_chern_view c, long long* num, long long* den) {
  return wrap([&] {
    require(s != nullptr && num != nullptr && den != nullptr, "null pointer");
    const ruled::Rational mu = ruled::slope(s->impl, make_class(h, h_len), make_chern(c));
    *num = mu.numerator();
    *den = mu.denominator();
  });
}

ruled_status ruled_stack_dim(const ruled_surface* s, ruled_chern_view c, long long* out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = ruled::stack_dim(s->impl, make_chern(c));
  });
}

ruled_status ruled_moduli_dims(const ruled_surface* s, ruled_chern_view c,
                               long long* dim_stable, long long* m, int* unirational) {
  return wrap([&] {
    require(s != nullptr && dim_stable != nullptr && m != nullptr && unirational != nullptr,
            "null pointer");
    const ruled::ModuliDims md = ruled::moduli_dims(s->impl, make_chern(c));
    *dim_stable = md.dim_stable_moduli;
    *m = md.m;
    *unirational = md.unirational ? 1 : 0;
  });
}

ruled_status ruled_construct_polarization(const ruled_surface* s, long long* h_out,
                                          size_t h_out_len) {
  return wrap([&] {
    require(s != nullptr, "null surface");
    copy_out(ruled::construct_good_polarization(s->impl), h_out, h_out_len);
  });
}

ruled_status ruled_hypothesis_value(const ruled_surface* s, const long long* h,
                                    size_t h_len, long long* out) {
  return wrap([&] {
    require(s != nullptr && out != nullptr, "null pointer");
    *out = ruled::hypothesis_value(s->impl, make_class(h, h_len));
  });
}

ruled_status ruled_is_ample(const ruled_surface* s, const long long* h, size_t h_len,
                            int* verdict) {
  return wrap([&] {
    require(s != nullptr && verdict != nullptr, "null pointer");
    switch (ruled::is_ample(s->impl, make_class(h, h_len))) {
      case ruled::AmpleVerdict::Ample:
        *verdict = RULED_AMPLE;
        break;
      case ruled::AmpleVerdict::NotAmple:
        *verdict = RULED_NOT_AMPLE;
        break;
      case ruled::AmpleVerdict::NecessaryChecksPassed:
        *verdict = RULED_NECESSARY_CHECKS_PASSED;
        break;
    }
  });
}

ruled_status ruled_stratum_codim(const long long* parts, size_t parts_len,
                                 long long torsion_points, long long* out) {
  return wrap([&] {
    require(parts != nullptr && out != nullptr, "null pointer");
    ruled::SplittingType type{std::vector<ruled::Int>(parts, parts + parts_len),
                              torsion_points};
    *out = ruled::stratum_codim(type);
  });
}

ruled_status ruled_strata_check(long long rank, long long d, long long min_part,
                                int* pass) {
  return wrap([&] {
    require(pass != nullptr, "null pointer");
    *pass = ruled::verify_strata(rank, d, min_part).pass ? 1 : 0;
  });
}

ruled_status ruled_cmd_surface_check(const char* config_text, char** out, int* exit_code) {
  return wrap([&] {
    require(config_text != nullptr, "null config text");
    run_command(ruled::cmd_surface_check(config_text), out, exit_code);
  });
}

ruled_status ruled_cmd_polarize(const char* config_text, char** out, int* exit_code) {
  return wrap([&] {
    require(config_text != nullptr, "null config text");
    run_command(ruled::cmd_polarize(config_text), out, exit_code);
  });
}

ruled_status ruled_cmd_reduce(const char* config_text, ruled_format format, char** out,
                              int* exit_code) {
  return wrap([&] {
    require(config_text != nullptr, "null config text");
    run_command(ruled::cmd_reduce(config_text, to_format(format)), out, exit_code);
  });
}

ruled_status ruled_cmd_report(const char* config_text, ruled_format format, char** out,
                              int* exit_code) {
  return wrap([&] {
    require(config_text != nullptr, "null config text");
    run_command(ruled::cmd_report(config_text, to_format(format)), out, exit_code);
  });
}

ruled_status ruled_cmd_strata(long long rank, long long d, long long min_part,
                              ruled_format format, char** out, int* exit_code) {
  return wrap([&] {
    run_command(ruled::cmd_strata(rank, d, min_part, to_format(format)), out, exit_code);
  });
}

void ruled_string_free(char* s) { std::free(s); }

}  // extern "C"
