#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gamma4/certify.hpp"
#include "gamma4/diagram.hpp"
#include "gamma4/goeritz.hpp"
#include "gamma4/lattice.hpp"
#include "gamma4/obstruct.hpp"

namespace gamma4 {

struct KnotEntry {
  InvariantRecord record;
  std::string pd_code;
};

// File readers. Errors are ParseError / DataMismatch with the file name and
// line number in the message.
std::vector<KnotEntry> read_knot_table(const std::filesystem::path& path);
std::vector<KnownValue> read_known(const std::filesystem::path& path);
std::vector<Certificate> read_certificates(const std::filesystem::path& path);
IntMatrix read_gram(const std::filesystem::path& path);

struct ExpectedValues {
  std::map<std::string, int> gamma4;
  std::map<int, int> group_sizes;                         // congruence class -> size
  std::map<int, std::vector<std::string>> group_listings;  // congruence class -> listed knots
};
ExpectedValues read_expected(const std::filesystem::path& path);

/// Everything computed about one knot before certificate propagation.
struct KnotAnalysis {
  InvariantRecord record;
  int congruence_class = 0;
  std::vector<GoeritzForm> forms;  // both checkerboard forms of the diagram as given
  bool lattice_on_mirror = false;  // class 6: the lattice test runs on the mirror
  std::vector<GoeritzForm> lattice_forms;
  std::optional<DonaldsonReport> donaldson;
  std::string lattice_note;
  std::optional<LinkingForm> linking;
  std::optional<MoebiusReport> moebius;
  std::string linking_note;
  LowerBound lower;
  double seconds = 0;
};

KnotAnalysis analyze_knot(const KnotEntry& entry, const EmbedOptions& opts = {});

/// Reference implementation: one knot after another.
std::vector<KnotAnalysis> analyze_census_serial(const std::vector<KnotEntry>& entries, const EmbedOptions& opts = {});

/// OpenMP version; results are written by index, so the output equals the
/// serial one regardless of scheduling. jobs <= 0 uses the OpenMP default.
std::vector<KnotAnalysis> analyze_census(const std::vector<KnotEntry>& entries, const EmbedOptions& opts = {},
                                         int jobs = 0);

/// Drop band moves whose source cannot be reached from a census knot (they
/// cannot affect this census). Returns how many were dropped.
std::size_t drop_unrelated_certificates(std::vector<Certificate>& certs, const std::vector<KnotEntry>& census);

struct CensusConfig {
  std::filesystem::path knots_file;
  std::filesystem::path known_file;
  std::filesystem::path certificates_file;
  std::optional<std::filesystem::path> expected_file;
  std::optional<std::filesystem::path> output;
  int jobs = 0;
  EmbedOptions embed;
};

struct CensusRun {
  std::vector<KnotAnalysis> analyses;
  BoundState bounds;
  CensusResolution resolution;
  std::map<int, int> group_sizes;
  std::size_t skipped_certificates = 0;
  nlohmann::ordered_json report;  // deterministic payload
  nlohmann::ordered_json timing;  // wall-clock data, kept apart from the payload
};

CensusRun run_census(const CensusConfig& cfg);

/// Exit status 0 iff every knot is resolved and, when an expected file is
/// given, every value matches it.
int cmd_census(const CensusConfig& cfg, std::ostream& out);
int cmd_knot(const std::string& name, const CensusConfig& cfg, std::ostream& out);
int cmd_embed(const std::filesystem::path& gram_file, std::size_t target_rank, const EmbedOptions& opts,
              std::ostream& out);

}  // namespace gamma4
