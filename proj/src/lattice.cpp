#include "gamma4/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gamma4/goeritz.hpp"

namespace gamma4 {

namespace {

Int isqrt(Int x) {
  if (x <= 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

__int128 isqrt128(__int128 x) {
  if (x <= 0) return 0;
  __int128 r = static_cast<__int128>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

class Searcher {
 public:
  Searcher(const IntMatrix& q, std::size_t n, const EmbedOptions& opts)
      : q_(q), r_(q.rows()), n_(n), cap_(opts.node_cap) {
    choose_order(opts.order);
    placed_.reserve(r_);
  }

  EmbeddingResult run() {
    EmbeddingResult res;
    const bool found = place(0);
    res.nodes_searched = nodes_;
    if (exhausted_) {
      res.status = EmbeddingStatus::ResourceExhausted;
    } else if (found) {
      res.status = EmbeddingStatus::Embeddable;
      res.witness = IntMatrix(r_, n_);
      for (std::size_t k = 0; k < r_; ++k)
        for (std::size_t c = 0; c < n_; ++c) res.witness(order_[k], c) = placed_[k][c];
    } else {
      res.status = EmbeddingStatus::NotEmbeddable;
    }
    return res;
  }

 private:
  void choose_order(BasisOrder how) {
    std::vector<char> used(r_, 0);
    for (std::size_t step = 0; step < r_; ++step) {
      std::size_t best = r_;
      std::size_t best_links = 0;
      for (std::size_t i = 0; i < r_; ++i) {
        if (used[i]) continue;
        std::size_t links = 0;
        for (std::size_t j : order_) links += q_(i, j) != 0;
        if (best == r_) {
          best = i, best_links = links;
          continue;
        }
        const Int a = q_(i, i), b = q_(best, best);
        const bool better_norm = how == BasisOrder::DecreasingNorm ? a > b : a < b;
        if (better_norm || (a == b && links > best_links)) best = i, best_links = links;
      }
      used[best] = 1;
      order_.push_back(best);
    }
  }

  // Accept candidate v for the basis vector at this depth and recurse.
  bool accept(std::size_t depth, const std::vector<Int>& v) {
    if (++nodes_ > cap_) {
      exhausted_ = true;
      return false;
    }
    placed_.push_back(v);
    suffix_.emplace_back(n_ + 1, 0);
    for (std::size_t c = n_; c-- > 0;) suffix_.back()[c] = suffix_.back()[c + 1] + v[c] * v[c];
    if (place(depth + 1)) return true;
    placed_.pop_back();
    suffix_.pop_back();
    return false;
  }

  bool place(std::size_t depth) {
    if (depth == r_) return true;
    const std::size_t i = order_[depth];
    const Int norm = q_(i, i);
    std::vector<Int> target(depth);
    for (std::size_t j = 0; j < depth; ++j) target[j] = q_(i, order_[j]);

    if (depth > 0 && depth + 1 == n_) return complement(depth, norm, target);

    // Coordinates whose columns in the placed vectors coincide are
    // interchangeable; all-zero columns may additionally be negated.
    std::vector<int> prev_same(n_, -1);
    std::vector<char> zero(n_, 1);
    for (std::size_t c = 0; c < n_; ++c) {
      for (std::size_t j = 0; j < depth; ++j) zero[c] = zero[c] && placed_[j][c] == 0;
      for (std::size_t cc = c; cc-- > 0;) {
        bool same = true;
        for (std::size_t j = 0; j < depth && same; ++j) same = placed_[j][c] == placed_[j][cc];
        if (same) {
          prev_same[c] = static_cast<int>(cc);
          break;
        }
      }
    }
    std::vector<Int> v(n_, 0), dots(depth, 0);
    return enumerate(depth, 0, norm, v, dots, target, prev_same, zero);
  }

  bool enumerate(std::size_t depth, std::size_t c, Int budget, std::vector<Int>& v, std::vector<Int>& dots,
                 const std::vector<Int>& target, const std::vector<int>& prev_same, const std::vector<char>& zero) {
    if (exhausted_) return false;
    if (c == n_) {
      if (budget != 0) return false;
      for (std::size_t j = 0; j < depth; ++j)
        if (dots[j] != target[j]) return false;
      return accept(depth, v);
    }
    const Int b = isqrt(budget);
    Int hi = b;
    const Int lo = zero[c] ? 0 : -b;
    if (prev_same[c] >= 0) hi = std::min(hi, v[prev_same[c]]);
    for (Int x = hi; x >= lo; --x) {
      const Int nb = budget - x * x;
      if (c + 1 == n_ && nb != 0) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const Int rem = target[j] - dots[j] - x * placed_[j][c];
        ok = static_cast<__int128>(rem) * rem <= static_cast<__int128>(nb) * suffix_[j][c + 1];
      }
      if (!ok) continue;
      v[c] = x;
      for (std::size_t j = 0; j < depth; ++j) dots[j] += x * placed_[j][c];
      const bool found = enumerate(depth, c + 1, nb, v, dots, target, prev_same, zero);
      for (std::size_t j = 0; j < depth; ++j) dots[j] -= x * placed_[j][c];
      v[c] = 0;
      if (found || exhausted_) return found;
    }
    return false;
  }

  // With N-1 independent vectors placed, the last one is pinned down by its
  // dot products up to the component along the orthogonal complement w:
  // v = (P^T y + s*g*w) / D, where D = det(Gk), y = adj(Gk) t, g = gcd(w) and
  // s^2 = (norm*D - t.y) / g^2.
  bool complement(std::size_t depth, Int norm, const std::vector<Int>& target) {
    const std::size_t k = depth;
    IntMatrix gk(k, k), p(k, n_);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) gk(a, b) = q_(order_[a], order_[b]);
      for (std::size_t c = 0; c < n_; ++c) p(a, c) = placed_[a][c];
    }
    const Int d = determinant(gk);

    std::vector<Int> y(k);
    __int128 ty = 0;
    for (std::size_t a = 0; a < k; ++a) {
      IntMatrix m = gk;
      for (std::size_t b = 0; b < k; ++b) m(b, a) = target[b];
      y[a] = determinant(m);
      ty += static_cast<__int128>(target[a]) * y[a];
    }

    std::vector<Int> w(n_);
    Int g = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      IntMatrix m(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0, cc = 0; b < n_; ++b)
          if (b != c) m(a, cc++) = p(a, b);
      w[c] = (c % 2 ? -1 : 1) * determinant(m);
      g = std::gcd(g, w[c] < 0 ? -w[c] : w[c]);
    }

    const __int128 num = static_cast<__int128>(norm) * d - ty;
    const __int128 g2 = static_cast<__int128>(g) * g;
    if (num < 0 || num % g2 != 0) return false;
    const __int128 s2 = num / g2;
    const __int128 s = isqrt128(s2);
    if (s * s != s2) return false;

    for (int sign : {1, -1}) {
      if (sign < 0 && s == 0) break;
      std::vector<Int> v(n_);
      bool integral = true;
      for (std::size_t c = 0; c < n_ && integral; ++c) {
        __int128 acc = sign * s * g * w[c];
        for (std::size_t a = 0; a < k; ++a) acc += static_cast<__int128>(p(a, c)) * y[a];
        integral = acc % d == 0;
        if (integral) v[c] = narrow(acc / d);
      }
      if (!integral) continue;
      if (accept(depth, v)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const IntMatrix& q_;
  std::size_t r_, n_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Int>> placed_;
  std::vector<std::vector<Int>> suffix_;
};

}  // namespace

std::vector<Int> square_divisors(Int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "square_divisors needs a positive integer");
  std::vector<Int> out;
  for (Int s = 1; s * s <= d; ++s)
    if (d % (s * s) == 0) out.push_back(d / (s * s));
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddingProblem EmbeddingProblem::make(IntMatrix gram, std::size_t target_rank) {
  if (!gram.is_square()) throw Error(ErrorCode::NonSymmetric, "gram matrix is not square");
  if (!gram.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "gram matrix is not symmetric");
  const auto def = definiteness(gram);
  if (def == Definiteness::Positive) gram = gram.negated();
  else if (def != Definiteness::Negative) throw Error(ErrorCode::NotDefinite, "gram matrix is " + std::string(to_string(def)));
  if (target_rank < gram.rows())
    throw Error(ErrorCode::InvalidArgument, "target rank " + std::to_string(target_rank) + " is below the lattice rank " +
                                                std::to_string(gram.rows()));
  return {std::move(gram), target_rank};
}

std::string_view to_string(EmbeddingStatus s) noexcept {
  switch (s) {
    case EmbeddingStatus::Embeddable: return "Embeddable";
    case EmbeddingStatus::NotEmbeddable: return "NotEmbeddable";
    case EmbeddingStatus::ResourceExhausted: return "ResourceExhausted";
  }
  return "Unknown";
}

EmbeddingResult embed(const EmbeddingProblem& p, const EmbedOptions& opts) {
  const IntMatrix q = p.gram.negated();
  auto res = Searcher(q, p.target_rank, opts).run();
  if (res.status == EmbeddingStatus::Embeddable && !verify_witness(res.witness, p.gram))
    throw Error(ErrorCode::InvalidArgument, "internal error: embedding witness failed verification");
  return res;
}

bool verify_witness(const IntMatrix& witness, const IntMatrix& gram) {
  if (witness.rows() != gram.rows()) return false;
  return (witness * witness.transposed()).negated() == gram;
}

namespace {

struct SnfState {
  IntMatrix a, u, v, u_inv;

  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row i += f * row j
  void row_add(std::size_t i, std::size_t j, Int f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = checked_add(a(i, c), checked_mul(f, a(j, c)));
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = checked_add(u(i, c), checked_mul(f, u(j, c)));
    for (std::size_t r = 0; r < u_inv.rows(); ++r)
      u_inv(r, j) = checked_sub(u_inv(r, j), checked_mul(f, u_inv(r, i)));
  }
  // col i += f * col j
  void col_add(std::size_t i, std::size_t j, Int f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = checked_add(a(r, i), checked_mul(f, a(r, j)));
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) = checked_add(v(r, i), checked_mul(f, v(r, j)));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
  }
};

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfState s{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows)};
  const std::size_t lim = std::min(rows, cols);

  for (std::size_t t = 0; t < lim; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s.a(i, j) != 0 && (pr == rows || std::abs(s.a(i, j)) < std::abs(s.a(pr, pc)))) pr = i, pc = j;
      if (pr == rows) break;
      s.row_swap(t, pr);
      s.col_swap(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        s.row_add(i, t, -floor_div(s.a(i, t), s.a(t, t)));
        clean = clean && s.a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        s.col_add(j, t, -floor_div(s.a(t, j), s.a(t, t)));
        clean = clean && s.a(t, j) == 0;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.a(i, j) % s.a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      s.row_add(t, bad, 1);
    }
    if (s.a(t, t) < 0) s.row_negate(t);
  }

  SmithForm out;
  for (std::size_t t = 0; t < lim; ++t) out.diagonal.push_back(s.a(t, t));
  out.u = std::move(s.u);
  out.v = std::move(s.v);
  out.u_inv = std::move(s.u_inv);
  return out;
}

}  // namespace gamma4
