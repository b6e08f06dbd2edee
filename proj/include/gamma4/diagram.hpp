#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gamma4 {

/// A knot projection in planar-diagram form. Each crossing lists its four edge
/// labels counter-clockwise starting at the incoming under-strand, so positions
/// 0 and 2 are the under-strand and positions 1 and 3 the over-strand.
/// Zero crossings is the unknot sentinel.
struct KnotDiagram {
  std::string name;
  std::vector<std::array<int, 4>> crossings;
  int edge_count = 0;

  std::size_t crossing_count() const noexcept { return crossings.size(); }
  bool is_unknot_sentinel() const noexcept { return crossings.empty(); }
};

/// Parse "X[a,b,c,d],X[...],..." (an optional PD[...] wrapper is accepted).
/// Labels are renumbered to 1..2c preserving their order.
/// Throws MalformedCode, NonKnot.
KnotDiagram parse_pd(std::string_view text, std::string name = {});

std::string to_pd_string(const KnotDiagram& d);

/// The mirror image: every crossing has its over and under strands exchanged.
KnotDiagram mirror(const KnotDiagram& d);

/// The wedge between position `slot` and position `slot + 1 (mod 4)` of a crossing.
struct Corner {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// A complementary region, as the cyclic sequence of crossing corners met while
/// walking its boundary, together with the edges walked.
struct Face {
  std::vector<Corner> corners;
  std::vector<int> edges;
};

struct FaceMap {
  std::vector<Face> faces;
  /// corner_face[4 * crossing + slot] is the index of the face owning that corner.
  std::vector<int> corner_face;

  int face_at(int crossing, int slot) const { return corner_face[4 * crossing + slot]; }
};

/// Faces of the planar embedding given by the rotation system of the PD code.
/// Throws NonPlanar when V - E + F != 2.
FaceMap extract_faces(const KnotDiagram& d);

enum class Shade { Black, White };

struct Coloring {
  FaceMap faces;
  std::vector<Shade> shading;    // per face
  std::vector<int> white_regions;  // face indices A_1..A_n, ascending
  std::vector<int> eta;          // per crossing, +1 or -1
  int id = 0;                    // 0 or 1
};

/// Crossing weight relative to a shading. At each crossing the four corners
/// alternate in colour; eta is +1 when the white corners are the ones swept by
/// turning the under-strand counter-clockwise onto the over-strand (slots 0 and
/// 2) and -1 otherwise. The two colourings of a diagram therefore have
/// pointwise opposite weights.
int crossing_weight(const FaceMap& faces, const std::vector<Shade>& shading, int crossing);

/// The two checkerboard colourings. Colouring 0 is the one in which the face
/// holding corner (0, 0) is white; for the unknot sentinel each colouring has
/// one white region.
std::pair<Coloring, Coloring> checkerboard(const KnotDiagram& d);

}  // namespace gamma4
