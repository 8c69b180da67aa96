#include "core/ns_lattice.hpp"

#include <sstream>
#include <utility>

namespace ruled {

namespace {

void check_same_size(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor classes have lengths " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
}

}  // namespace

DivisorClass::DivisorClass(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2)
    throw Error(ErrorCode::DimensionMismatch,
                "divisor class needs at least the (sigma, f) coordinates");
}

DivisorClass DivisorClass::zero(std::size_t size) {
  return DivisorClass(std::vector<Int>(size, 0));
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  check_same_size(a, b);
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  check_same_size(a, b);
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator-(const DivisorClass& a) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
  return DivisorClass(std::move(c));
}

DivisorClass operator*(Int n, const DivisorClass& a) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = n * a[i];
  return DivisorClass(std::move(c));
}

RuledSurface make_geometrically_ruled(Int genus, Int e) {
  if (genus < 0)
    throw Error(ErrorCode::UnsupportedSurface, "genus must be nonnegative");
  if (e < 0)
    throw Error(ErrorCode::UnsupportedSurface,
                "surfaces with e < 0 are not supported");
  return RuledSurface(genus, e, 0);
}

RuledSurface RuledSurface::blow_up() const {
  return RuledSurface(genus_, e_, blowups_ + 1);
}

RuledSurface RuledSurface::blow_down() const {
  if (blowups_ == 0)
    throw Error(ErrorCode::NoBlowdown,
                "surface is geometrically ruled; nothing to contract");
  return RuledSurface(genus_, e_, blowups_ - 1);
}

void check_class(const RuledSurface& s, const DivisorClass& d) {
  if (static_cast<Int>(d.size()) != s.picard_rank())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor class has length " + std::to_string(d.size()) +
                    ", expected picard rank " + std::to_string(s.picard_rank()));
}

Int intersect(const RuledSurface& s, const DivisorClass& a, const DivisorClass& b) {
  check_class(s, a);
  check_class(s, b);
  Int v = -s.e_invariant() * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
  for (std::size_t i = 2; i < a.size(); ++i) v -= a[i] * b[i];
  return v;
}

DivisorClass canonical_class(const RuledSurface& s) {
  std::vector<Int> c(static_cast<std::size_t>(s.picard_rank()), 1);
  c[0] = -2;
  c[1] = 2 * s.genus() - 2 - s.e_invariant();
  return DivisorClass(std::move(c));
}

DivisorClass fiber_class(const RuledSurface& s) {
  std::vector<Int> c(static_cast<std::size_t>(s.picard_rank()), 0);
  c[1] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass section_class(const RuledSurface& s) {
  std::vector<Int> c(static_cast<std::size_t>(s.picard_rank()), 0);
  c[0] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass exceptional_class(const RuledSurface& s, Int index) {
  if (index < 1 || index > s.blowup_count())
    throw Error(ErrorCode::Argument,
                "exceptional index " + std::to_string(index) +
                    " out of range 1.." + std::to_string(s.blowup_count()));
  std::vector<Int> c(static_cast<std::size_t>(s.picard_rank()), 0);
  c[static_cast<std::size_t>(1 + index)] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass pushforward_class(const RuledSurface& s, const DivisorClass& d) {
  if (s.blowup_count() == 0)
    throw Error(ErrorCode::NoBlowdown,
                "pushforward needs at least one exceptional class");
  check_class(s, d);
  std::vector<Int> c(d.coeffs().begin(), d.coeffs().end() - 1);
  return DivisorClass(std::move(c));
}

DivisorClass pullback_class(const DivisorClass& d) {
  std::vector<Int> c = d.coeffs();
  c.push_back(0);
  return DivisorClass(std::move(c));
}

std::string to_string(const DivisorClass& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != 0) os << ", ";
    os << d[i];
  }
  os << ']';
  return os.str();
}

}  // namespace ruled
