#include "gamma4/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "gamma4/error.hpp"

namespace gamma4 {
namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc{}) fail("expected an edge label");
    i = static_cast<std::size_t>(ptr - s.data());
    return v;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::MalformedCode, what + " at offset " + std::to_string(i));
  }
};

using Dart = std::pair<int, int>;

// twin[4c+i] is the other occurrence of the label at (c, i).
std::vector<int> twins(const KnotDiagram& d) {
  std::map<int, std::vector<int>> occ;
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    for (int i = 0; i < 4; ++i) occ[d.crossings[c][i]].push_back(static_cast<int>(4 * c + i));
  std::vector<int> twin(4 * d.crossings.size(), -1);
  for (const auto& [label, where] : occ) {
    if (where.size() != 2)
      throw Error(ErrorCode::NonKnot, "edge label " + std::to_string(label) + " appears " +
                                          std::to_string(where.size()) + " times");
    twin[where[0]] = where[1];
    twin[where[1]] = where[0];
  }
  return twin;
}

// Walk the knot from the incoming under-strand of crossing 0. Returns, per
// crossing, the slot (1 or 3) at which the over-strand enters.
std::vector<int> trace_over_entries(const KnotDiagram& d, const std::vector<int>& twin) {
  const int n = static_cast<int>(d.crossings.size());
  std::vector<int> over_in(n, -1);
  std::vector<char> seen(4 * n, 0);
  int dart = 0;
  int visited = 0;
  while (!seen[dart]) {
    const int c = dart / 4, i = dart % 4;
    if (i == 2) throw Error(ErrorCode::MalformedCode, "under-strand at crossing " + std::to_string(c + 1) +
                                                          " is traversed against the PD orientation");
    if (i == 1 || i == 3) over_in[c] = i;
    const int out = 4 * c + (i + 2) % 4;
    seen[dart] = seen[out] = 1;
    visited += 2;
    dart = twin[out];
  }
  if (visited != 4 * n) throw Error(ErrorCode::NonKnot, "diagram has more than one component");
  return over_in;
}

}  // namespace

KnotDiagram parse_pd(std::string_view text, std::string name) {
  Cursor cur{text};
  bool wrapped = false;
  cur.skip_ws();
  if (cur.s.substr(cur.i, 3) == "PD[") {
    cur.i += 3;
    wrapped = true;
  }

  KnotDiagram d;
  d.name = std::move(name);
  while (!cur.done()) {
    if (wrapped && cur.s[cur.i] == ']') break;
    if (!d.crossings.empty()) cur.expect(',');
    cur.expect('X');
    cur.expect('[');
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      if (k) cur.expect(',');
      x[k] = cur.integer();
    }
    cur.expect(']');
    d.crossings.push_back(x);
  }
  if (wrapped) {
    cur.expect(']');
    if (!cur.done()) cur.fail("trailing text after PD[...]");
  }
  if (d.crossings.empty()) return d;

  std::vector<int> labels;
  for (const auto& x : d.crossings) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (auto& x : d.crossings)
    for (auto& e : x) e = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), e) - labels.begin()) + 1;
  d.edge_count = static_cast<int>(labels.size());

  auto twin = twins(d);
  if (d.edge_count != 2 * static_cast<int>(d.crossings.size()))
    throw Error(ErrorCode::NonKnot, "edge count is not twice the crossing count");
  trace_over_entries(d, twin);
  return d;
}

std::string to_pd_string(const KnotDiagram& d) {
  std::ostringstream os;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    os << (c ? "," : "") << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  return os.str();
}

KnotDiagram mirror(const KnotDiagram& d) {
  KnotDiagram m = d;
  if (d.crossings.empty()) return m;
  auto over_in = trace_over_entries(d, twins(d));
  // Rotating the tuple keeps the cyclic order; the old incoming over-strand
  // becomes the new incoming under-strand.
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    const int s = over_in[c];
    m.crossings[c] = {x[s], x[(s + 1) % 4], x[(s + 2) % 4], x[(s + 3) % 4]};
  }
  return m;
}

FaceMap extract_faces(const KnotDiagram& d) {
  FaceMap fm;
  if (d.crossings.empty()) {
    fm.faces.resize(2);
    return fm;
  }
  const auto twin = twins(d);
  const int darts = static_cast<int>(twin.size());
  std::vector<int> dart_face(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (dart_face[start] >= 0) continue;
    Face f;
    const int id = static_cast<int>(fm.faces.size());
    for (int dart = start; dart_face[dart] < 0;) {
      dart_face[dart] = id;
      const int c = dart / 4, i = dart % 4;
      f.corners.push_back({c, (i + 3) % 4});
      f.edges.push_back(d.crossings[c][i]);
      const int t = twin[dart];
      dart = 4 * (t / 4) + (t % 4 + 1) % 4;
    }
    fm.faces.push_back(std::move(f));
  }
  fm.corner_face.resize(darts);
  for (int c = 0; c < darts / 4; ++c)
    for (int i = 0; i < 4; ++i) fm.corner_face[4 * c + i] = dart_face[4 * c + (i + 1) % 4];

  const int v = darts / 4, e = d.edge_count, f = static_cast<int>(fm.faces.size());
  if (v - e + f != 2)
    throw Error(ErrorCode::NonPlanar, "Euler characteristic " + std::to_string(v - e + f) + " for " +
                                          (d.name.empty() ? std::string("diagram") : d.name));
  return fm;
}

int crossing_weight(const FaceMap& faces, const std::vector<Shade>& shading, int crossing) {
  return shading[faces.face_at(crossing, 0)] == Shade::White ? 1 : -1;
}

std::pair<Coloring, Coloring> checkerboard(const KnotDiagram& d) {
  FaceMap fm = extract_faces(d);
  const int nf = static_cast<int>(fm.faces.size());

  // Two-colour the faces so that cyclically adjacent corners differ.
  std::vector<int> colour(nf, -1);
  if (!d.crossings.empty()) {
    std::vector<std::vector<int>> adj(nf);
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
      for (int i = 0; i < 4; ++i) {
        const int a = fm.face_at(static_cast<int>(c), i), b = fm.face_at(static_cast<int>(c), (i + 1) % 4);
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    std::vector<int> stack{fm.face_at(0, 0)};
    colour[stack.back()] = 0;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int g : adj[f]) {
        if (colour[g] < 0) {
          colour[g] = 1 - colour[f];
          stack.push_back(g);
        } else if (colour[g] == colour[f]) {
          throw Error(ErrorCode::NonPlanar, "faces do not admit a checkerboard colouring");
        }
      }
    }
  } else {
    colour = {0, 1};
  }

  auto make = [&](int id) {
    Coloring col;
    col.id = id;
    col.faces = fm;
    col.shading.resize(nf);
    for (int f = 0; f < nf; ++f) {
      col.shading[f] = colour[f] == id ? Shade::White : Shade::Black;
      if (col.shading[f] == Shade::White) col.white_regions.push_back(f);
    }
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
      col.eta.push_back(crossing_weight(fm, col.shading, static_cast<int>(c)));
    return col;
  };
  return {make(0), make(1)};
}

}  // namespace gamma4
