#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamma4/diagram.hpp"
#include "gamma4/matrix.hpp"

namespace gamma4 {

struct PreGoeritzMatrix {
  std::size_t n = 0;
  IntMatrix entries;
  std::vector<int> white_regions;  // face index of each row
  std::vector<int> incidence;      // crossing corners touching each white region
  std::string knot;
  int coloring = 0;
};

enum class Definiteness { Positive, Negative, Indefinite, Degenerate };

std::string_view to_string(Definiteness d) noexcept;

struct GoeritzForm {
  std::size_t rank = 0;
  IntMatrix gram;
  std::size_t deleted_index = 0;
  Definiteness definiteness = Definiteness::Degenerate;
  std::string knot;
  int coloring = 0;
};

/// g_ij = -(sum of eta over crossings whose white corners are regions i and j),
/// g_ii = -(sum of the other entries in row i).
PreGoeritzMatrix pregoeritz(const Coloring& c, std::string knot = {});

/// The white region of largest incidence, lowest index on ties.
std::size_t default_deleted_index(const PreGoeritzMatrix& pg);

/// Delete row and column k (default_deleted_index when omitted).
/// Throws InvalidArgument for n < 2, Degenerate when the minor is singular.
GoeritzForm goeritz(const PreGoeritzMatrix& pg, std::optional<std::size_t> k = std::nullopt);

/// Exact determinant by fraction-free (Bareiss) elimination with 128-bit
/// intermediates. Throws Overflow if a minor leaves the 64-bit range.
Int determinant(const IntMatrix& m);

/// Determinants of the leading 1x1 ... nxn blocks.
std::vector<Int> leading_minors(const IntMatrix& m);

Definiteness definiteness(const IntMatrix& m);

/// Both Goeritz forms of a diagram, coloring 0 first.
std::pair<GoeritzForm, GoeritzForm> goeritz_pair(const KnotDiagram& d);

}  // namespace gamma4
