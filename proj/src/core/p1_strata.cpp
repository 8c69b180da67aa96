#include "core/p1_strata.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "core/intmath.hpp"

namespace ruled {

namespace {

// Weakly decreasing tuples with `count` parts in [min_part, cap] summing to
// `total`, emitted head-first so the overall order is lexicographically
// ascending.
template <typename Fn>
void emit_parts(Int count, Int total, Int cap, Int min_part, std::vector<Int>& acc, Fn&& fn) {
  if (count == 0) {
    if (total == 0) fn(acc);
    return;
  }
  const Int lo = std::max(min_part, detail::ceildiv(total, count));
  const Int hi = std::min(cap, total - (count - 1) * min_part);
  for (Int v = lo; v <= hi; ++v) {
    acc.push_back(v);
    emit_parts(count - 1, total - v, v, min_part, acc, fn);
    acc.pop_back();
  }
}

template <typename Fn>
void for_each_splitting_type(Int rank, Int degree, Int min_part, Fn&& fn) {
  if (rank < 1) throw Error(ErrorCode::RankTooSmall, "splitting types need rank >= 1");
  const Int t_max = degree - rank * min_part;
  std::vector<Int> acc;
  acc.reserve(static_cast<std::size_t>(rank));
  for (Int t = 0; t <= t_max; ++t) {
    emit_parts(rank, degree - t, std::numeric_limits<Int>::max(), min_part, acc,
               [&](const std::vector<Int>& parts) { fn(parts, t); });
  }
}

void validate(const SplittingType& s) {
  if (s.parts.empty())
    throw Error(ErrorCode::RankTooSmall, "splitting type needs at least one part");
  if (s.torsion_points < 0)
    throw Error(ErrorCode::Argument, "torsion point count must be nonnegative");
  for (std::size_t i = 1; i < s.parts.size(); ++i)
    if (s.parts[i - 1] < s.parts[i])
      throw Error(ErrorCode::Argument, "splitting type parts must be weakly decreasing");
}

std::vector<Int> generic_parts(Int rank, Int d) {
  // (0^{r-d}, (-1)^d); for d = 0 this is the trivial type
  std::vector<Int> p(static_cast<std::size_t>(rank), 0);
  for (Int i = 0; i < d; ++i) p[static_cast<std::size_t>(rank - 1 - i)] = -1;
  return p;
}

std::vector<Int> codim1_parts(Int rank) {
  // (1, 0^{r-2}, -1)
  std::vector<Int> p(static_cast<std::size_t>(rank), 0);
  p.front() = 1;
  p.back() = -1;
  return p;
}

}  // namespace

Int SplittingType::degree() const {
  Int total = torsion_points;
  for (Int a : parts) total += a;
  return total;
}

std::vector<SplittingType> enumerate_splitting_types(Int rank, Int degree, Int min_part) {
  std::vector<SplittingType> out;
  for_each_splitting_type(rank, degree, min_part, [&](const std::vector<Int>& parts, Int t) {
    out.push_back(SplittingType{parts, t});
  });
  return out;
}

Int stratum_codim(const SplittingType& s) {
  validate(s);
  Int ext1 = 0;
  for (Int a : s.parts)
    for (Int b : s.parts)
      if (a - b > 1) ext1 += a - b - 1;
  return ext1 + s.torsion_points * (s.rank() + 1);
}

StrataReport verify_strata(Int rank, Int d, Int min_part) {
  if (rank < 2) throw Error(ErrorCode::Argument, "stratification check needs rank >= 2");
  if (d < 0 || d >= rank)
    throw Error(ErrorCode::Argument, "stratification check needs 0 <= d < rank");
  if (min_part > -1)
    throw Error(ErrorCode::Window,
                "window too small: min_part must be <= -1 so the checked types are enumerable");

  const Int degree = -d;
  const std::vector<Int> generic = generic_parts(rank, d);
  const std::vector<Int> codim1 = codim1_parts(rank);

  StrataReport rep;
  rep.rank = rank;
  rep.d = d;
  rep.min_part = min_part;

  bool special_ok = true;
  constexpr std::size_t kMaxOffenders = 50;

  for_each_splitting_type(rank, degree, min_part, [&](const std::vector<Int>& parts, Int t) {
    ++rep.total_types;
    const SplittingType type{parts, t};
    const Int codim = stratum_codim(type);
    if (t == 0 && parts == generic) {
      rep.special.push_back({type, codim, "generic"});
      if (codim != 0) special_ok = false;
      return;
    }
    if (d == 0 && t == 0 && parts == codim1) {
      rep.special.push_back({type, codim, "codim-1"});
      if (codim != 1) special_ok = false;
      return;
    }
    if (rep.other_min_codim < 0 || codim < rep.other_min_codim)
      rep.other_min_codim = codim;
    if (codim < 2 && rep.offenders.size() < kMaxOffenders)
      rep.offenders.push_back({type, codim, "offender"});
  });

  rep.pass = special_ok && rep.offenders.empty();
  return rep;
}

std::string to_string(const SplittingType& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i != 0) os << ", ";
    os << s.parts[i];
  }
  os << ')';
  return os.str();
}

}  // namespace ruled
