#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamma4/goeritz.hpp"
#include "gamma4/lattice.hpp"

namespace gamma4 {

struct InvariantRecord {
  std::string name;
  int signature = 0;
  int arf = 0;
  Int determinant = 1;
  bool slice = false;
  bool alternating = false;
  std::optional<int> known_gamma4;

  /// Throws DataMismatch if the determinant is even or non-positive, arf is
  /// not 0/1, a slice knot has nonzero signature or non-square determinant.
  /// Throws OddSignature for an odd signature.
  void validate() const;

  /// Record of the mirror image: the signature changes sign.
  InvariantRecord mirrored() const;
};

/// (sigma + 4 arf) mod 8, in {0, 2, 4, 6}. Throws OddSignature.
int congruence_class(int sigma, int arf);

/// 2 when the class is 4, nothing otherwise.
std::optional<int> congruence_lower_bound(const InvariantRecord& rec);

/// Arf = 0 exactly when det = +-1 mod 8.
bool arf_matches_determinant(const InvariantRecord& rec);

struct EmbeddingAttempt {
  std::string form;  // "negative" or "positive (negated)"
  Int ell = 0;
  EmbeddingResult result;
};

struct DonaldsonReport {
  int congruence_class = 0;
  std::vector<EmbeddingAttempt> attempts;
  bool exhausted = false;  // some search hit the node cap
  std::optional<int> bound;
};

/// Lattice obstruction. For class 2 pass the negative definite form, for
/// class 6 the positive definite one, for class 0 both (any order). Each form
/// is canonicalized to negative definite and G + [-l] is tested against
/// (Z^{rank+1}, -Id) for every square divisor l of det. A bound of 2 is
/// returned when every test of every required form is NotEmbeddable.
/// Throws WrongDefiniteness, InvalidArgument (class 4).
DonaldsonReport donaldson_obstruction(const InvariantRecord& rec, std::span<const GoeritzForm> forms,
                                      const EmbedOptions& opts = {});

/// The form x -> q x^2 / n on Z/n, stored as the least element of the orbit
/// {+-u^2 q mod n : u a unit}.
struct LinkingForm {
  Int n = 1;
  Int q = 0;
  friend bool operator==(const LinkingForm&, const LinkingForm&) = default;
};

LinkingForm canonical_linking_form(Int n, Int q);

/// Linking form on coker(g) given by -g^{-1}. Throws NonCyclic.
LinkingForm linking_form(const IntMatrix& g);
inline LinkingForm linking_form(const GoeritzForm& g) { return linking_form(g.gram); }

struct MoebiusReport {
  std::optional<int> bound;
  bool precondition_failed = false;  // some prime divides n to an even power
};

/// Bound 2 iff no unit u has q u^2 = +-1 mod n.
MoebiusReport moebius_obstruction(const LinkingForm& lf);

}  // namespace gamma4
