#include "core/config.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace ruled {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

Int to_int(std::string_view token, int line, const std::string& key) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end())
    parse_fail(line, "field '" + key + "' expects a decimal integer, got '" +
                         std::string(token) + "'");
  return value;
}

std::vector<Int> to_int_list(std::string_view value, int line, const std::string& key) {
  std::string_view body = trim(value);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') parse_fail(line, "field '" + key + "' has an unclosed '['");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::string spaced(body);
  for (char& ch : spaced)
    if (ch == ',') ch = ' ';
  std::istringstream in(spaced);
  std::vector<Int> out;
  std::string token;
  while (in >> token) out.push_back(to_int(token, line, key));
  if (out.empty()) parse_fail(line, "field '" + key + "' expects an integer list");
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
};

}  // namespace

Config parse_config(std::string_view text) {
  static const std::set<std::string, std::less<>> known = {
      "surface.genus", "surface.e", "surface.blowups",
      "sheaf.rank",    "sheaf.c1",  "sheaf.c2",        "polarization"};

  std::map<std::string, Entry, std::less<>> kv;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(lineno, "expected key = value");
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (!known.contains(key)) parse_fail(lineno, "unknown key '" + key + "'");
    if (value.empty()) parse_fail(lineno, "empty value for '" + key + "'");
    if (!kv.emplace(key, Entry{value, lineno}).second)
      parse_fail(lineno, "duplicate key '" + key + "'");
  }

  const auto need = [&](const char* key) -> const Entry& {
    const auto it = kv.find(key);
    if (it == kv.end())
      throw Error(ErrorCode::Parse, std::string("missing key '") + key + "'");
    return it->second;
  };

  const Entry& genus_e = need("surface.genus");
  const Entry& e_e = need("surface.e");
  const Entry& blowups_e = need("surface.blowups");
  const Int genus = to_int(genus_e.value, genus_e.line, "surface.genus");
  const Int e = to_int(e_e.value, e_e.line, "surface.e");
  const Int blowups = to_int(blowups_e.value, blowups_e.line, "surface.blowups");
  if (blowups < 0) parse_fail(blowups_e.line, "surface.blowups must be >= 0");

  RuledSurface surface = make_geometrically_ruled(genus, e);
  for (Int i = 0; i < blowups; ++i) surface = surface.blow_up();

  const Entry& rank_e = need("sheaf.rank");
  const Entry& c1_e = need("sheaf.c1");
  const Entry& c2_e = need("sheaf.c2");
  const Int rank = to_int(rank_e.value, rank_e.line, "sheaf.rank");
  std::vector<Int> c1 = to_int_list(c1_e.value, c1_e.line, "sheaf.c1");
  if (static_cast<Int>(c1.size()) != surface.picard_rank())
    throw Error(ErrorCode::DimensionMismatch,
                "sheaf.c1 has length " + std::to_string(c1.size()) +
                    ", expected picard rank " + std::to_string(surface.picard_rank()) +
                    " (basis sigma, f, E_1..E_n)");
  ChernData sheaf(rank, DivisorClass(std::move(c1)),
                  to_int(c2_e.value, c2_e.line, "sheaf.c2"));

  std::optional<DivisorClass> polarization;
  if (const auto it = kv.find("polarization"); it != kv.end() && it->second.value != "auto") {
    std::vector<Int> h = to_int_list(it->second.value, it->second.line, "polarization");
    if (static_cast<Int>(h.size()) != surface.picard_rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "polarization has length " + std::to_string(h.size()) +
                      ", expected picard rank " + std::to_string(surface.picard_rank()));
    polarization = DivisorClass(std::move(h));
  }

  return Config{std::move(surface), std::move(sheaf), std::move(polarization)};
}

std::string render_config(const Config& cfg) {
  std::ostringstream os;
  os << "surface.genus = " << cfg.surface.genus() << "\n"
     << "surface.e = " << cfg.surface.e_invariant() << "\n"
     << "surface.blowups = " << cfg.surface.blowup_count() << "\n"
     << "sheaf.rank = " << cfg.sheaf.rank << "\n"
     << "sheaf.c1 = " << to_string(cfg.sheaf.c1) << "\n"
     << "sheaf.c2 = " << cfg.sheaf.c2 << "\n"
     << "polarization = "
     << (cfg.polarization ? to_string(*cfg.polarization) : std::string("auto")) << "\n";
  return os.str();
}

}  // namespace ruled
