#include "gamma4/obstruct.hpp"

#include <numeric>

namespace gamma4 {

namespace {

Int mod(__int128 a, Int n) {
  __int128 r = a % n;
  if (r < 0) r += n;
  return static_cast<Int>(r);
}

bool is_square(Int x) {
  if (x < 0) return false;
  Int r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

}  // namespace

void InvariantRecord::validate() const {
  if (signature % 2 != 0) throw Error(ErrorCode::OddSignature, name + ": signature " + std::to_string(signature));
  if (arf != 0 && arf != 1) throw Error(ErrorCode::DataMismatch, name + ": Arf invariant must be 0 or 1");
  if (determinant <= 0 || determinant % 2 == 0)
    throw Error(ErrorCode::DataMismatch, name + ": determinant must be odd and positive");
  if (slice && (signature != 0 || !is_square(determinant)))
    throw Error(ErrorCode::DataMismatch, name + ": slice knot with nonzero signature or non-square determinant");
}

InvariantRecord InvariantRecord::mirrored() const {
  InvariantRecord m = *this;
  m.signature = -signature;
  return m;
}

int congruence_class(int sigma, int arf) {
  if (sigma % 2 != 0) throw Error(ErrorCode::OddSignature, "signature " + std::to_string(sigma));
  return ((sigma + 4 * arf) % 8 + 8) % 8;
}

std::optional<int> congruence_lower_bound(const InvariantRecord& rec) {
  if (congruence_class(rec.signature, rec.arf) == 4) return 2;
  return std::nullopt;
}

bool arf_matches_determinant(const InvariantRecord& rec) {
  const Int r = rec.determinant % 8;
  return (rec.arf == 0) == (r == 1 || r == 7);
}

DonaldsonReport donaldson_obstruction(const InvariantRecord& rec, std::span<const GoeritzForm> forms,
                                      const EmbedOptions& opts) {
  DonaldsonReport rep;
  rep.congruence_class = congruence_class(rec.signature, rec.arf);

  std::vector<const GoeritzForm*> use;
  auto pick = [&](Definiteness want) {
    for (const auto& f : forms)
      if (f.definiteness == want) return &f;
    throw Error(ErrorCode::WrongDefiniteness, rec.name + ": class " + std::to_string(rep.congruence_class) +
                                                  " needs a " + std::string(to_string(want)) + " definite form");
  };
  switch (rep.congruence_class) {
    case 2: use = {pick(Definiteness::Negative)}; break;
    case 6: use = {pick(Definiteness::Positive)}; break;
    case 0: use = {pick(Definiteness::Negative), pick(Definiteness::Positive)}; break;
    default:
      throw Error(ErrorCode::InvalidArgument, rec.name + ": lattice obstruction does not apply to class 4");
  }

  const auto ells = square_divisors(rec.determinant);
  bool obstructed = true;
  for (const GoeritzForm* f : use) {
    const bool negated = f->definiteness == Definiteness::Positive;
    const IntMatrix g = negated ? f->gram.negated() : f->gram;
    for (Int ell : ells) {
      auto p = EmbeddingProblem::make(g.direct_sum(IntMatrix{{-ell}}), g.rows() + 1);
      EmbeddingAttempt a{negated ? "positive (negated)" : "negative", ell, embed(p, opts)};
      const auto status = a.result.status;
      rep.attempts.push_back(std::move(a));
      if (status == EmbeddingStatus::ResourceExhausted) rep.exhausted = true;
      if (status != EmbeddingStatus::NotEmbeddable) {
        obstructed = false;
        if (status == EmbeddingStatus::Embeddable) return rep;
      }
    }
  }
  if (obstructed) rep.bound = 2;
  return rep;
}

LinkingForm canonical_linking_form(Int n, Int q) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "linking form order must be positive");
  if (n == 1) return {1, 0};
  q = mod(q, n);
  if (std::gcd(q, n) != 1) throw Error(ErrorCode::InvalidArgument, "linking form value is not a unit");
  Int best = q;
  for (Int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const Int v = mod(static_cast<__int128>(mod(static_cast<__int128>(u) * u, n)) * q, n);
    best = std::min({best, v, mod(-static_cast<__int128>(v), n)});
  }
  return {n, best};
}

LinkingForm linking_form(const IntMatrix& g) {
  if (!g.is_square() || g.rows() == 0) throw Error(ErrorCode::InvalidArgument, "linking form needs a nonempty square matrix");
  const Int det = determinant(g);
  if (det == 0) throw Error(ErrorCode::Degenerate, "singular matrix has infinite cokernel");
  const Int n = det < 0 ? -det : det;

  const auto snf = smith_normal_form(g);
  int nontrivial = 0;
  for (Int d : snf.diagonal) nontrivial += d != 1;
  if (nontrivial > 1) throw Error(ErrorCode::NonCyclic, "cokernel is not cyclic");
  if (n == 1) return {1, 0};

  // Generator x = U^{-1} e_last; self-linking -x^T g^{-1} x = -x^T adj(g) x / det.
  const std::size_t r = g.rows();
  std::vector<Int> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = mod(snf.u_inv(i, r - 1), n);
  __int128 acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Int cof = 1;
      if (r > 1) {
        IntMatrix m(r - 1, r - 1);
        for (std::size_t a = 0, ra = 0; a < r; ++a) {
          if (a == j) continue;
          for (std::size_t b = 0, cb = 0; b < r; ++b)
            if (b != i) m(ra, cb++) = g(a, b);
          ++ra;
        }
        cof = determinant(m);
      }
      // adj(g)(i, j) is the (j, i) cofactor.
      const Int adj = mod(static_cast<__int128>((i + j) % 2 ? -cof : cof), n);
      acc = (acc + static_cast<__int128>(x[i]) * adj % n * x[j]) % n;
    }
  }
  const Int q = det > 0 ? mod(-acc, n) : mod(acc, n);
  return canonical_linking_form(n, q);
}

MoebiusReport moebius_obstruction(const LinkingForm& lf) {
  MoebiusReport rep;
  const Int n = lf.n;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) m /= p, ++e;
    if (e > 0 && e % 2 == 0) rep.precondition_failed = true;
  }
  if (n % 2 == 0) rep.precondition_failed = true;
  if (rep.precondition_failed) return rep;

  for (Int u = 1; u <= n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    const Int v = mod(static_cast<__int128>(mod(static_cast<__int128>(u) * u, n)) * lf.q, n);
    if (v == mod(1, n) || v == mod(-1, n)) return rep;
  }
  rep.bound = 2;
  return rep;
}

}  // namespace gamma4
