#include "gamma4/goeritz.hpp"

#include <algorithm>
#include <cstdlib>

namespace gamma4 {

std::string_view to_string(Definiteness d) noexcept {
  switch (d) {
    case Definiteness::Positive: return "positive";
    case Definiteness::Negative: return "negative";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "unknown";
}

PreGoeritzMatrix pregoeritz(const Coloring& c, std::string knot) {
  PreGoeritzMatrix pg;
  pg.knot = std::move(knot);
  pg.coloring = c.id;
  pg.white_regions = c.white_regions;
  pg.n = c.white_regions.size();
  pg.entries = IntMatrix(pg.n, pg.n);
  pg.incidence.assign(pg.n, 0);

  std::vector<int> row_of(c.shading.size(), -1);
  for (std::size_t r = 0; r < pg.n; ++r) row_of[c.white_regions[r]] = static_cast<int>(r);

  const std::size_t crossings = c.eta.size();
  for (std::size_t x = 0; x < crossings; ++x) {
    const int cx = static_cast<int>(x);
    // White corners sit at slots 0,2 when eta = +1 and at slots 1,3 otherwise.
    const int s = c.eta[x] > 0 ? 0 : 1;
    const int a = row_of[c.faces.face_at(cx, s)];
    const int b = row_of[c.faces.face_at(cx, s + 2)];
    ++pg.incidence[a];
    ++pg.incidence[b];
    if (a == b) continue;  // nugatory crossing
    pg.entries(a, b) = checked_sub(pg.entries(a, b), c.eta[x]);
    pg.entries(b, a) = pg.entries(a, b);
  }
  for (std::size_t i = 0; i < pg.n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < pg.n; ++j)
      if (j != i) s = checked_add(s, pg.entries(i, j));
    pg.entries(i, i) = -s;
  }
  return pg;
}

std::size_t default_deleted_index(const PreGoeritzMatrix& pg) {
  if (pg.n == 0) throw Error(ErrorCode::InvalidArgument, "empty PreGoeritz matrix");
  return static_cast<std::size_t>(std::max_element(pg.incidence.begin(), pg.incidence.end()) - pg.incidence.begin());
}

GoeritzForm goeritz(const PreGoeritzMatrix& pg, std::optional<std::size_t> k) {
  if (pg.n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two white regions");
  GoeritzForm g;
  g.deleted_index = k.value_or(default_deleted_index(pg));
  if (g.deleted_index >= pg.n) throw Error(ErrorCode::InvalidArgument, "deleted index out of range");
  g.gram = pg.entries.without(g.deleted_index);
  g.rank = g.gram.rows();
  g.knot = pg.knot;
  g.coloring = pg.coloring;
  g.definiteness = definiteness(g.gram);
  if (g.definiteness == Definiteness::Degenerate)
    throw Error(ErrorCode::Degenerate, "singular Goeritz matrix" + (pg.knot.empty() ? "" : " for " + pg.knot));
  return g;
}

namespace {

Int bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(a(i, j)) * a(k, k) - static_cast<__int128>(a(i, k)) * a(k, j);
        a(i, j) = narrow(v / prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

Int determinant(const IntMatrix& m) { return bareiss(m); }

std::vector<Int> leading_minors(const IntMatrix& m) {
  std::vector<Int> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) out.push_back(determinant(m.leading(k)));
  return out;
}

Definiteness definiteness(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "definiteness of a non-symmetric matrix");
  if (m.rows() == 0) return Definiteness::Positive;
  const auto minors = leading_minors(m);
  if (minors.back() == 0) return Definiteness::Degenerate;
  bool pos = true, neg = true;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    pos = pos && minors[k] > 0;
    neg = neg && (k % 2 == 0 ? minors[k] < 0 : minors[k] > 0);
  }
  if (pos) return Definiteness::Positive;
  if (neg) return Definiteness::Negative;
  return Definiteness::Indefinite;
}

std::pair<GoeritzForm, GoeritzForm> goeritz_pair(const KnotDiagram& d) {
  auto [c0, c1] = checkerboard(d);
  return {goeritz(pregoeritz(c0, d.name)), goeritz(pregoeritz(c1, d.name))};
}

}  // namespace gamma4
