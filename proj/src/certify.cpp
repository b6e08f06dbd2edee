#include "gamma4/certify.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace gamma4 {

std::string normalize_name(std::string_view name) {
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
  if (!name.empty() && (name.front() == '+' || name.front() == '-')) name.remove_prefix(1);
  return std::string(name);
}

int crossing_number(std::string_view name) {
  const std::string n = normalize_name(name);
  int total = 0;
  std::size_t start = 0;
  while (start <= n.size()) {
    std::size_t end = n.find('#', start);
    if (end == std::string::npos) end = n.size();
    std::string_view part = std::string_view(n).substr(start, end - start);
    if (!part.empty() && (part.front() == '+' || part.front() == '-')) part.remove_prefix(1);
    std::size_t i = 0;
    int c = 0;
    while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) c = 10 * c + (part[i++] - '0');
    if (i == 0 || i == part.size() || (part[i] != '_' && part[i] != 'a' && part[i] != 'n'))
      throw Error(ErrorCode::InvalidArgument, "cannot read a crossing number from '" + std::string(name) + "'");
    total += c;
    start = end + 1;
  }
  return total;
}

namespace {

bool edge_less(const std::pair<BandMove, std::string>& a, const std::pair<BandMove, std::string>& b) {
  return std::tie(a.first.source, a.first.target, a.first.framing, a.second) <
         std::tie(b.first.source, b.first.target, b.first.framing, b.second);
}

}  // namespace

CertificateGraph ingest(std::span<const Certificate> certs, std::span<const InvariantRecord> census,
                        std::span<const KnownValue> known) {
  CertificateGraph g;
  std::map<std::string, const InvariantRecord*> table;
  for (const auto& r : census) {
    const std::string n = normalize_name(r.name);
    g.census.insert(n);
    table[n] = &r;
  }
  std::set<std::string> known_names;

  auto add_seed = [&](const std::string& knot, int value, const std::string& source) {
    auto it = g.seed.find(knot);
    if (it != g.seed.end() && it->second != value) {
      // A slice knot has gamma4 = 1, so "slice" and "known 1" agree.
      const int lo = std::min(it->second, value), hi = std::max(it->second, value);
      if (!(lo == 0 && hi == 1))
        throw Error(ErrorCode::ConflictingKnownValue, knot + ": " + g.seed_source[knot] + " vs " + source);
      if (value > it->second) return;
    } else if (it != g.seed.end()) {
      // Same value twice: keep one source independently of input order.
      if (source < g.seed_source[knot]) g.seed_source[knot] = source;
      return;
    }
    g.seed[knot] = value;
    g.seed_source[knot] = source;
  };

  add_seed(std::string(kUnknot), 0, "unknot");
  for (const auto& k : known) {
    if (k.gamma4 < 1) throw Error(ErrorCode::InvalidCertificate, k.name + ": known gamma4 must be positive");
    const std::string n = normalize_name(k.name);
    known_names.insert(n);
    add_seed(n, k.gamma4, "known gamma4 = " + std::to_string(k.gamma4));
  }

  // Slice and known certificates first so that band-move targets can be checked.
  for (const auto& c : certs) {
    if (const auto* s = std::get_if<SliceFact>(&c.fact)) {
      const std::string n = normalize_name(s->knot);
      if (auto it = table.find(n); it != table.end() && !it->second->slice)
        throw Error(ErrorCode::ConflictingKnownValue, n + ": slice certificate for a knot the table lists as non-slice");
      known_names.insert(n);
      add_seed(n, 0, "slice (" + c.provenance + ")");
    } else if (const auto* k = std::get_if<KnownGamma4>(&c.fact)) {
      if (k->gamma4 < 1) throw Error(ErrorCode::InvalidCertificate, k->knot + ": known gamma4 must be positive");
      const std::string n = normalize_name(k->knot);
      known_names.insert(n);
      add_seed(n, k->gamma4, "known gamma4 = " + std::to_string(k->gamma4) + " (" + c.provenance + ")");
    }
  }

  auto exists = [&](const std::string& n) {
    return n == kUnknot || g.census.count(n) || known_names.count(n);
  };
  for (const auto& c : certs) {
    const auto* b = std::get_if<BandMove>(&c.fact);
    if (!b) continue;
    BandMove e{normalize_name(b->source), b->framing, normalize_name(b->target)};
    if (e.framing < -1 || e.framing > 1)
      throw Error(ErrorCode::InvalidCertificate, e.source + ": framing " + std::to_string(e.framing) + " not in {-1,0,1}");
    if (!exists(e.source)) throw Error(ErrorCode::UnknownKnot, "band move source " + e.source);
    if (!exists(e.target)) throw Error(ErrorCode::UnknownKnot, "band move target " + e.target);
    if (e.source == e.target) throw Error(ErrorCode::InvalidCertificate, e.source + ": band move to itself");
    if (crossing_number(e.target) > crossing_number(e.source) && !known_names.count(e.target))
      throw Error(ErrorCode::InvalidCertificate,
                  e.source + " -> " + e.target + ": target has more crossings and no known value");
    g.edges.emplace_back(std::move(e), c.provenance);
  }
  std::sort(g.edges.begin(), g.edges.end(), edge_less);
  return g;
}

BoundState propagate(const CertificateGraph& g, const std::map<std::string, LowerBound>& obstructions) {
  BoundState s;
  s.surface = g.seed;
  s.seed_source = g.seed_source;

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [e, prov] : g.edges) {
      auto t = s.surface.find(e.target);
      if (t == s.surface.end()) continue;
      const int candidate = t->second + 1;
      auto src = s.surface.find(e.source);
      if (src == s.surface.end() || candidate < src->second) {
        s.surface[e.source] = candidate;
        s.surface_via[e.source] = e;
        changed = true;
      }
    }
  }

  for (const auto& name : g.census) {
    Bound b;
    if (auto it = obstructions.find(name); it != obstructions.end()) {
      b.lower = std::max(1, it->second.value);
      b.sources = it->second.reasons;
    }
    if (auto it = s.surface.find(name); it != s.surface.end()) {
      b.upper = std::max(1, it->second);
      if (auto v = s.surface_via.find(name); v != s.surface_via.end()) {
        b.via = v->second;
      } else {
        b.sources.push_back("upper bound: " + s.seed_source.at(name));
      }
    }
    if (b.upper && b.lower > *b.upper)
      throw Error(ErrorCode::Inconsistent, name + ": lower bound " + std::to_string(b.lower) + " exceeds upper bound " +
                                               std::to_string(*b.upper));
    s.knots.emplace(name, std::move(b));
  }
  return s;
}

std::vector<std::string> derivation(const BoundState& s, const std::string& knot) {
  std::vector<std::string> out;
  std::string cur = normalize_name(knot);
  std::set<std::string> seen;
  while (seen.insert(cur).second) {
    auto val = s.surface.find(cur);
    if (val == s.surface.end()) {
      out.push_back(cur + ": no upper bound");
      break;
    }
    if (auto v = s.surface_via.find(cur); v != s.surface_via.end()) {
      const auto& e = v->second;
      out.push_back(cur + " --band(" + (e.framing > 0 ? "+1" : std::to_string(e.framing)) + ")--> " + e.target);
      cur = e.target;
      continue;
    }
    out.push_back(cur + ": " + s.seed_source.at(cur));
    break;
  }
  return out;
}

CensusResolution resolve_census(const BoundState& s, const std::optional<std::map<std::string, int>>& expected) {
  CensusResolution r;
  for (const auto& [name, b] : s.knots) {
    if (b.resolved()) {
      r.by_value[b.lower].push_back(name);
    } else {
      r.unresolved.push_back(name);
    }
    if (expected) {
      auto it = expected->find(name);
      if (it == expected->end() || !b.resolved() || it->second != b.lower) r.mismatches.push_back(name);
    }
  }
  if (expected)
    for (const auto& [name, v] : *expected)
      if (!s.knots.count(name)) r.mismatches.push_back(name);
  std::sort(r.mismatches.begin(), r.mismatches.end());
  return r;
}

}  // namespace gamma4
