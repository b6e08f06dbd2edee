#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gamma4/obstruct.hpp"

namespace gamma4 {

struct SliceFact {
  std::string knot;
};

struct KnownGamma4 {
  std::string knot;
  int gamma4 = 1;
};

/// A non-orientable band move turning `source` into `target`; framing is the
/// number of half twists in {-1, 0, +1}.
struct BandMove {
  std::string source;
  int framing = 0;
  std::string target;
};

struct Certificate {
  std::variant<SliceFact, KnownGamma4, BandMove> fact;
  std::string provenance;
};

/// Strip a leading mirror marker ("+" or "-"); mirrors share gamma4.
std::string normalize_name(std::string_view name);

/// Crossing number read off a table name: "10_9" -> 10, "11n_83" -> 11,
/// "3_1#-3_1" -> 6, "0_1" -> 0. Throws InvalidArgument.
int crossing_number(std::string_view name);

inline constexpr std::string_view kUnknot = "0_1";

struct KnownValue {
  std::string name;
  int gamma4 = 1;
};

struct CertificateGraph {
  std::set<std::string> census;
  /// Best surface seed per node: 0 for a slice knot (it bounds a disk),
  /// otherwise a known gamma4.
  std::map<std::string, int> seed;
  std::map<std::string, std::string> seed_source;
  std::vector<std::pair<BandMove, std::string>> edges;  // sorted, with provenance
};

/// Build the graph. Names are mirror-normalized; the unknot is a built-in
/// slice node. Throws UnknownKnot (a certificate names a knot that is neither
/// in the census nor in the known table), ConflictingKnownValue (two seeds
/// disagree, or a slice certificate contradicts the table) and
/// InvalidCertificate (bad framing, self loop, target failing the
/// crossing-number screen).
CertificateGraph ingest(std::span<const Certificate> certs, std::span<const InvariantRecord> census,
                        std::span<const KnownValue> known);

struct LowerBound {
  int value = 1;
  std::vector<std::string> reasons;
};

struct Bound {
  int lower = 1;
  std::optional<int> upper;
  std::vector<std::string> sources;
  /// Band move realizing the upper bound, when it does not come from a seed.
  std::optional<BandMove> via;

  bool resolved() const { return upper && *upper == lower; }
  friend bool operator==(const Bound& a, const Bound& b) {
    return a.lower == b.lower && a.upper == b.upper && a.sources == b.sources &&
           a.via.has_value() == b.via.has_value() &&
           (!a.via || (a.via->source == b.via->source && a.via->framing == b.via->framing &&
                       a.via->target == b.via->target));
  }
};

struct BoundState {
  std::map<std::string, Bound> knots;  // census knots
  std::map<std::string, int> surface;  // every node: 0 = bounds a disk, else best gamma4 upper bound
  std::map<std::string, BandMove> surface_via;
  std::map<std::string, std::string> seed_source;
  friend bool operator==(const BoundState& a, const BoundState& b) {
    return a.knots == b.knots && a.surface == b.surface && a.seed_source == b.seed_source;
  }
};

/// Fixed point of upper(K) <- min(upper(K), upper(K') + 1) over band moves,
/// starting from the seeds; census lower bounds are max(1, obstructions).
/// Throws Inconsistent naming the first census knot with lower > upper.
BoundState propagate(const CertificateGraph& g, const std::map<std::string, LowerBound>& obstructions);

/// Human readable chain: the band moves from `knot` down to a seed.
std::vector<std::string> derivation(const BoundState& s, const std::string& knot);

struct CensusResolution {
  std::map<int, std::vector<std::string>> by_value;
  std::vector<std::string> unresolved;
  /// Knots whose value differs from the expected table (including unresolved ones).
  std::vector<std::string> mismatches;
};

CensusResolution resolve_census(const BoundState& s,
                                const std::optional<std::map<std::string, int>>& expected = std::nullopt);

}  // namespace gamma4
