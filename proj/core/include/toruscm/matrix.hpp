#pragma once

#include <string>
#include <vector>

#include "toruscm/numfield.hpp"

namespace toruscm {

class IntMatrix;

// Dense matrix whose entries share one number field; rational matrices use Q.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, int rows, int cols);
  static FieldMatrix identity(FieldPtr field, int n);
  static FieldMatrix from_rationals(const std::vector<std::vector<Rational>>& rows,
                                    FieldPtr field = NumberField::rationals());
  static FieldMatrix from_ints(const IntMatrix& m, FieldPtr field = NumberField::rationals());
  // [[a, b], [c, d]] assembled from equally sized blocks.
  static FieldMatrix blocks(const FieldMatrix& a, const FieldMatrix& b, const FieldMatrix& c, const FieldMatrix& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElement& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const FieldElement& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator-() const;
  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldElement& s) const;
  FieldMatrix operator*(const Rational& s) const;
  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

  FieldMatrix transpose() const;
  FieldMatrix conj() const;
  FieldMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const FieldMatrix& b);
  FieldMatrix row(int i) const { return block(i, 0, 1, cols_); }
  FieldMatrix col(int j) const { return block(0, j, rows_, 1); }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_rational() const;

  // Entrywise rational values; throws when an entry is irrational.
  std::vector<std::vector<Rational>> to_rationals() const;
  // Same entries viewed in another field (rational entries can move anywhere).
  FieldMatrix in_field(const FieldPtr& target) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<FieldElement> data_;
};

FieldMatrix operator*(const Rational& s, const FieldMatrix& m);
FieldMatrix operator*(const FieldElement& s, const FieldMatrix& m);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(int n);
  // Throws InvalidArgument unless every entry is an integer.
  static IntMatrix from_field(const FieldMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Integer& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  IntMatrix transpose() const;
  IntMatrix block(int r0, int c0, int nr, int nc) const;
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  bool is_zero() const;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace toruscm
