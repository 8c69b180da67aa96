#pragma once

#include "core/ns_lattice.hpp"

namespace ruled {

enum class AmpleVerdict { Ample, NotAmple, NecessaryChecksPassed };

/// Geometrically ruled surfaces get the exact criterion (e >= 0):
/// a sigma + b f is ample iff a > 0 and b > a e.  On blown-up surfaces the
/// verdict is Ample only for the divisor produced by
/// construct_good_polarization; any other divisor gets the necessary
/// positivity checks H^2 > 0, H.f > 0, H.sigma > 0, H.E_i > 0, H.(f-E_i) > 0
/// against the known curve classes.
AmpleVerdict is_ample(const RuledSurface& s, const DivisorClass& h);

/// Ample H with H.(K_S+f) < 0.  Base case: sigma + b f with the smallest b
/// satisfying b > e and 2g-1+e-2b < 0.  Each blowup level: 2 pullback(H1) - E.
DivisorClass construct_good_polarization(const RuledSurface& s);

/// The exact integer H.(K_S+f); the caller tests the sign.
Int hypothesis_value(const RuledSurface& s, const DivisorClass& h);

const char* to_string(AmpleVerdict v);

}  // namespace ruled
