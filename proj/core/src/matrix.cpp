#include "toruscm/matrix.hpp"

#include <sstream>

#include "toruscm/errors.hpp"

namespace toruscm {

namespace {

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (a == b || a->same_as(*b)) return a;
  if (a->is_rationals()) return b;
  if (b->is_rationals()) return a;
  throw Error(ErrorCode::FieldMismatch, a->describe() + " vs " + b->describe());
}

void require_same_shape(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
}

}  // namespace

FieldMatrix::FieldMatrix(FieldPtr field, int rows, int cols) : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::DimensionMismatch, "negative dimension");
  data_.assign(static_cast<std::size_t>(rows * cols), FieldElement(field_));
}

FieldMatrix FieldMatrix::identity(FieldPtr field, int n) {
  FieldMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = FieldElement(field, Rational(1));
  return m;
}

FieldMatrix FieldMatrix::from_rationals(const std::vector<std::vector<Rational>>& rows, FieldPtr field) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  FieldMatrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = FieldElement(field, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

FieldMatrix FieldMatrix::from_ints(const IntMatrix& src, FieldPtr field) {
  FieldMatrix m(field, src.rows(), src.cols());
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) m(i, j) = FieldElement(field, Rational(src(i, j)));
  return m;
}

FieldMatrix FieldMatrix::blocks(const FieldMatrix& a, const FieldMatrix& b, const FieldMatrix& c,
                                const FieldMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw Error(ErrorCode::DimensionMismatch, "block shapes");
  FieldPtr f = join_fields(join_fields(a.field(), b.field()), join_fields(c.field(), d.field()));
  FieldMatrix m(f, a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  require_same_shape(*this, o, "add");
  FieldMatrix m(join_fields(field_, o.field_), rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
  return m;
}

FieldMatrix FieldMatrix::operator-() const {
  FieldMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const { return *this + (-o); }

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_)
    throw Error(ErrorCode::DimensionMismatch, "multiply: " + std::to_string(cols_) + " vs " + std::to_string(o.rows_));
  FieldMatrix m(join_fields(field_, o.field_), rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const FieldElement& b = o(k, j);
        if (b.is_zero()) continue;
        m(i, j) += a * b;
      }
    }
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldElement& s) const {
  FieldMatrix m(join_fields(field_, s.field()), rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * s;
  return m;
}

FieldMatrix FieldMatrix::operator*(const Rational& s) const {
  FieldMatrix m = *this;
  for (auto& x : m.data_) x = x * s;
  return m;
}

FieldMatrix operator*(const Rational& s, const FieldMatrix& m) { return m * s; }
FieldMatrix operator*(const FieldElement& s, const FieldMatrix& m) { return m * s; }

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

FieldMatrix FieldMatrix::conj() const {
  FieldMatrix m = *this;
  for (auto& x : m.data_) x = x.conj();
  return m;
}

FieldMatrix FieldMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  FieldMatrix m(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void FieldMatrix::set_block(int r0, int c0, const FieldMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
  FieldPtr f = join_fields(field_, b.field());
  if (f != field_) {
    *this = in_field(f);
  }
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j).in_field(field_);
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool FieldMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (i == j ? !(x.is_rational() && x.rational_value() == 1) : !x.is_zero()) return false;
    }
  return true;
}

bool FieldMatrix::is_symmetric() const { return is_square() && *this == transpose(); }
bool FieldMatrix::is_antisymmetric() const { return is_square() && *this == -transpose(); }

bool FieldMatrix::is_rational() const {
  for (const auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

std::vector<std::vector<Rational>> FieldMatrix::to_rationals() const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_), std::vector<Rational>(static_cast<std::size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j).rational_value();
  return out;
}

FieldMatrix FieldMatrix::in_field(const FieldPtr& target) const {
  FieldMatrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].in_field(target);
  return m;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  data_.assign(static_cast<std::size_t>(rows * cols), Integer(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_field(const FieldMatrix& src) {
  IntMatrix m(src.rows(), src.cols());
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) {
      Rational v = src(i, j).rational_value();
      if (v.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "entry is not an integer: " + v.get_str());
      m(i, j) = v.get_num();
    }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "integer multiply");
  IntMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "integer add");
  IntMatrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const {
  IntMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace toruscm
