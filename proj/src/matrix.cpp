#include "gamma4/matrix.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace gamma4 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedCode: return "MalformedCode";
    case ErrorCode::NonKnot: return "NonKnot";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NotDefinite: return "NotDefinite";
    case ErrorCode::OddSignature: return "OddSignature";
    case ErrorCode::WrongDefiniteness: return "WrongDefiniteness";
    case ErrorCode::NonCyclic: return "NonCyclic";
    case ErrorCode::UnknownKnot: return "UnknownKnot";
    case ErrorCode::ConflictingKnownValue: return "ConflictingKnownValue";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::DataMismatch: return "DataMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Int narrow(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw Error(ErrorCode::Overflow, "128-bit intermediate does not fit in 64 bits");
  return static_cast<Int>(v);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix n(*this);
  for (auto& x : n.data_) x = checked_sub(0, x);
  return n;
}

IntMatrix IntMatrix::without(std::size_t k) const {
  if (!is_square() || k >= rows_) throw Error(ErrorCode::InvalidArgument, "deleted index out of range");
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, r = 0; i < rows_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, c = 0; j < cols_; ++j) {
      if (j == k) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::leading(std::size_t k) const {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& other) const {
  IntMatrix m(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, cols_ + j) = other(i, j);
  return m;
}

IntMatrix IntMatrix::conjugated(std::span<const std::size_t> perm, std::span<const int> signs) const {
  if (!is_square() || perm.size() != rows_ || signs.size() != rows_)
    throw Error(ErrorCode::InvalidArgument, "signed permutation size mismatch");
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(perm[i], perm[j]) = (*this)(i, j) * signs[i] * signs[j];
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Int> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',') {
        ++i;
        continue;
      }
      Int v = 0;
      const char* first = line.data() + i;
      const char* last = line.data() + line.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r' && *ptr != ','))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected an integer");
      row.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": row length differs from the first row");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace gamma4
