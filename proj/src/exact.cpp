#include "unihyp/exact.hpp"

#include <utility>

namespace unihyp {

Int det_exact(const IntMat& input) {
  if (input.rows() != input.cols()) fail(ErrorCode::InvalidInput, "determinant needs a square matrix");
  int n = input.rows();
  if (n == 0) return 1;
  IntMat m = input;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) return 0;
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m(pivot, j), m(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Int cofactor_exact(const IntMat& m, int i, int j) {
  int n = m.rows();
  if (i < 0 || j < 0 || i >= n || j >= n) fail(ErrorCode::InvalidInput, "cofactor index out of range");
  IntMat minor(n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == i) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == j) continue;
      minor(rr, cc) = m(r, c);
      ++cc;
    }
    ++rr;
  }
  Int d = det_exact(minor);
  return ((i + j) % 2 == 0) ? d : -d;
}

namespace {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

}  // namespace

int rank_exact(const RatMat& input) {
  RatMat m = input;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == -1) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

int rank_exact(const IntMat& m) { return rank_exact(to_rat(m)); }

namespace {

// p(x) = x^n + c1 x^(n-1) + ... + cn via M <- A*M + c_k*I,
// c_(k+1) = -tr(A*M)/(k+1). Divisions are exact over both Int and Rat.
template <typename T>
std::vector<T> char_poly_fl(const Mat<T>& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::InvalidInput, "characteristic polynomial needs a square matrix");
  int n = a.rows();
  std::vector<T> c_desc(static_cast<size_t>(n) + 1);
  c_desc[0] = 1;
  if (n == 0) return c_desc;
  Mat<T> m = Mat<T>::identity(n);
  Mat<T> am = a;
  c_desc[1] = -trace(am);
  for (int k = 1; k < n; ++k) {
    m = am;
    for (int i = 0; i < n; ++i) m(i, i) += c_desc[k];
    am = a * m;
    c_desc[k + 1] = -trace(am) / T(k + 1);
  }
  // ascending order
  std::vector<T> asc(c_desc.rbegin(), c_desc.rend());
  return asc;
}

int poly_degree(const RatPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RatPoly poly_mod(RatPoly a, const RatPoly& b) {
  int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db && da >= 0; da = poly_degree(a)) {
    Rat f = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a[da] = 0;  // clear residual exactly
  }
  return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (poly_degree(b) >= 0) {
    RatPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = poly_degree(a);
  if (d >= 0) {
    Rat lead = a[d];
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

IntPoly char_poly_exact(const IntMat& m) { return char_poly_fl(m); }
RatPoly char_poly_exact(const RatMat& m) { return char_poly_fl(m); }

RatPoly to_rat_poly(const IntPoly& p) {
  RatPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

int distinct_root_count(const IntPoly& p) {
  RatPoly rp = to_rat_poly(p);
  int d = poly_degree(rp);
  if (d <= 0) return 0;
  RatPoly dp(static_cast<size_t>(d));
  for (int i = 1; i <= d; ++i) dp[i - 1] = rp[i] * i;
  RatPoly g = poly_gcd(rp, dp);
  return d - poly_degree(g);
}

}  // namespace unihyp
