#ifndef UNIHYP_EXACT_HPP
#define UNIHYP_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "unihyp/errors.hpp"

namespace unihyp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Minimal dense matrix for exact scalars. Floating-point linear algebra goes
// through Eigen; this type only backs the integer/rational computations
// (Bareiss elimination, Faddeev-LeVerrier), which are hand-rolled anyway.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& other) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      const T& ail = a(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

template <typename T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <typename T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <typename T>
T trace(const Mat<T>& a) {
  T s = 0;
  for (int i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

// Fraction-free (Bareiss) determinant; exact for any integral domain scalar.
Int det_exact(const IntMat& m);

// (-1)^(i+j) times the minor with row i and column j removed.
Int cofactor_exact(const IntMat& m, int i, int j);

// Exact ranks. The rational path is plain Gaussian elimination.
int rank_exact(const IntMat& m);
int rank_exact(const RatMat& m);

// Polynomials are coefficient vectors in ascending powers; characteristic
// polynomials are monic of degree = order.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

// Faddeev-LeVerrier; all divisions are exact.
IntPoly char_poly_exact(const IntMat& m);
RatPoly char_poly_exact(const RatMat& m);

// Number of distinct complex roots: deg p - deg gcd(p, p').
int distinct_root_count(const IntPoly& p);

RatPoly to_rat_poly(const IntPoly& p);

}  // namespace unihyp

#endif
