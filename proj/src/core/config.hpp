#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/sheaf_invariants.hpp"

namespace ruled {

/// Parsed pipeline input: the surface, the sheaf class, and either an
/// explicit polarization or none (meaning "construct one").
struct Config {
  RuledSurface surface;
  ChernData sheaf;
  std::optional<DivisorClass> polarization;
};

/// Key/value config text.  Keys: surface.genus, surface.e, surface.blowups,
/// sheaf.rank, sheaf.c1, sheaf.c2, polarization.  Lists are decimal integers
/// in the basis order (sigma, f, E_1..E_n), with or without brackets and
/// commas; '#' starts a comment; whitespace is free.  polarization accepts
/// "auto" (the default when absent) or a coordinate list.
Config parse_config(std::string_view text);

/// Canonical config text; parse_config(render_config(cfg)) reproduces cfg.
std::string render_config(const Config& cfg);

}  // namespace ruled
