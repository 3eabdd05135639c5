// Dense vectors and matrices over Rat.  Dimensions in this project stay small
// (at most 133, flattened operators up to ~18k columns), so a plain row-major
// layout is all we need.
#pragma once

#include "nil8/rat.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace nil8 {

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
void axpy(Vec& acc, const Rat& c, const Vec& v);  // acc += c*v
bool is_zero(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);

class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_ints(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void append_row(const Vec& v);

  Mat transposed() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Vec apply(const Vec& x) const;  // this * x
  Rat trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

Mat bracket(const Mat& a, const Mat& b);  // ab - ba

}  // namespace nil8
