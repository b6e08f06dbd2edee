#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gamma4/matrix.hpp"

namespace gamma4 {

/// All l dividing d with d / l a perfect square, ascending.
std::vector<Int> square_divisors(Int d);

/// Embed a negative definite lattice into (Z^N, -Id).
struct EmbeddingProblem {
  IntMatrix gram;
  std::size_t target_rank = 0;

  /// Validates and canonicalizes: a positive definite gram is negated.
  /// Throws NonSymmetric, NotDefinite, InvalidArgument (N < rank).
  static EmbeddingProblem make(IntMatrix gram, std::size_t target_rank);
};

enum class EmbeddingStatus { Embeddable, NotEmbeddable, ResourceExhausted };

std::string_view to_string(EmbeddingStatus s) noexcept;

/// Order in which basis vectors are assigned.
enum class BasisOrder {
  DecreasingNorm,  // largest |g_ii| first, ties towards vectors linked to those already placed
  IncreasingNorm,  // smallest |g_ii| first, same tie-break
};

struct EmbedOptions {
  std::uint64_t node_cap = 1'000'000'000;
  BasisOrder order = BasisOrder::DecreasingNorm;
};

struct EmbeddingResult {
  EmbeddingStatus status = EmbeddingStatus::NotEmbeddable;
  /// rank x N; row i is the image of basis vector i. Empty unless Embeddable.
  IntMatrix witness;
  std::uint64_t nodes_searched = 0;
};

/// Exhaustive backtracking search. Candidates for each basis vector are the
/// integer vectors of the right norm whose dot products with the vectors
/// already placed match; coordinates that are interchangeable given the
/// placed vectors are only tried in canonical (sorted, sign-normalized) form.
EmbeddingResult embed(const EmbeddingProblem& p, const EmbedOptions& opts = {});

/// M * (-Id) * M^T == gram.
bool verify_witness(const IntMatrix& witness, const IntMatrix& gram);

struct SmithForm {
  std::vector<Int> diagonal;  // d_1 | d_2 | ... , nonnegative
  IntMatrix u, v, u_inv;      // u * m * v = diag(diagonal)
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace gamma4
