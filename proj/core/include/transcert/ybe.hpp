#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "transcert/big_rational.hpp"
#include "transcert/errors.hpp"
#include "transcert/interval.hpp"

namespace transcert::ybe {

/// Exact complex number with rational parts.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }
inline std::complex<double> to_complex(const GaussianRational& z) { return z.to_complex(); }
inline bool is_exact_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }
inline bool is_exact_zero(const GaussianRational& z) { return z.is_zero(); }

/// Dense row-major matrix over T, where T is std::complex<double> or GaussianRational.
template <class T>
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const T& v : data_)
      if (!is_exact_zero(v)) return false;
    return true;
  }

  /// Largest entry modulus.
  double max_norm() const {
    double m = 0.0;
    for (const T& v : data_) m = std::max(m, std::abs(to_complex(v)));
    return m;
  }

  /// Induced infinity norm (max row sum); submultiplicative.
  double inf_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += std::abs(to_complex((*this)(i, j)));
      m = std::max(m, s);
    }
    return m;
  }

  friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    check_same(a, b);
    CMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    check_same(a, b);
    CMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    CMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_exact_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  friend CMatrix operator*(const T& s, const CMatrix& a) {
    CMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  static void check_same(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using DMatrix = CMatrix<std::complex<double>>;
using QMatrix = CMatrix<GaussianRational>;

template <class T>
CMatrix<T> kron(const CMatrix<T>& a, const CMatrix<T>& b) {
  CMatrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_exact_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

namespace detail {
template <class T>
void require_on_square(const CMatrix<T>& j, std::size_t n) {
  if (!j.square() || j.rows() != n * n) throw DimensionMismatch("lift: J must be n^2 x n^2");
}
}  // namespace detail

/// J (x) I_n, acting on factors 1 and 2 of V^(x)3 with dim V = n.
template <class T>
CMatrix<T> lift12(const CMatrix<T>& j, std::size_t n) {
  detail::require_on_square(j, n);
  return kron(j, CMatrix<T>::identity(n));
}

/// I_n (x) J, acting on factors 2 and 3.
template <class T>
CMatrix<T> lift23(const CMatrix<T>& j, std::size_t n) {
  detail::require_on_square(j, n);
  return kron(CMatrix<T>::identity(n), j);
}

/// dim V for a J acting on V (x) V.
std::size_t factor_dimension(std::size_t rows);

/// Antidiagonal (i/alpha, i, i, alpha i). Throws ZeroAlpha.
QMatrix alpha_family(const BigRational& alpha);
DMatrix alpha_family(double alpha);

/// [[0,0,0,1],[0,0,1,0],[0,-1,0,0],[-1,0,0,0]]
template <class T>
CMatrix<T> majorana_J() {
  CMatrix<T> m(4, 4);
  m(0, 3) = T(1);
  m(1, 2) = T(1);
  m(2, 1) = T(-1);
  m(3, 0) = T(-1);
  return m;
}

template <class T>
struct JReport {
  CMatrix<T> square_plus_identity;  // J^2 + I
  CMatrix<T> commutator;            // J12 J23 - J23 J12
  CMatrix<T> anticommutator;        // J12 J23 + J23 J12
  double squares_to_minus_identity = 0.0;
  double commutation_12_23 = 0.0;
  double anticommutation_12_23 = 0.0;
};

template <class T>
JReport<T> j_report(const CMatrix<T>& j) {
  const std::size_t n = factor_dimension(j.rows());
  const CMatrix<T> a = lift12(j, n);
  const CMatrix<T> b = lift23(j, n);
  const CMatrix<T> ab = a * b;
  const CMatrix<T> ba = b * a;
  JReport<T> r;
  r.square_plus_identity = j * j + CMatrix<T>::identity(j.rows());
  r.commutator = ab - ba;
  r.anticommutator = ab + ba;
  r.squares_to_minus_identity = r.square_plus_identity.max_norm();
  r.commutation_12_23 = r.commutator.max_norm();
  r.anticommutation_12_23 = r.anticommutator.max_norm();
  return r;
}

/// cos(x) I + sin(x) J.
DMatrix r_of_x(const DMatrix& j, double x);

/// || R12(x) R23(x+y) R12(y) - R23(y) R12(x+y) R23(x) ||_max on V^(x)3.
double ybe_residual(const DMatrix& j, double x, double y);

struct MatrixExp {
  DMatrix value;
  /// Bound on the truncation error in the infinity norm, carried through squaring.
  double truncation_bound = 0.0;
};

/// Scaling and squaring with a Taylor core.
MatrixExp matrix_exp(const DMatrix& a);

/// || e^(pi J) + I ||_max plus the propagated truncation bound.
double euler_matrix_residual(const DMatrix& j);

/// Row-major 2x2 real matrix.
using Mat2 = std::array<double, 4>;

struct InequalityCheck {
  /// M = X^2 - pi X + e I, entries enclosed directly.
  std::array<RInterval, 4> direct;
  /// Off-diagonal x_ij (tr X - pi), diagonal (x_ii^2 - pi x_ii + e) + x_12 x_21.
  std::array<RInterval, 4> certificate;
  RInterval trace_minus_pi;
  /// Every entry of M is certified > 0.
  bool holds = false;
  /// First entry (row-major index) not certified positive.
  std::optional<int> witness_entry;
  /// Some entry is certified < 0.
  bool violated = false;
  /// max |mid(direct) - mid(certificate)| over the four entries.
  double certificate_gap = 0.0;
  /// Each direct enclosure overlaps its certificate enclosure.
  bool certificate_consistent = false;
};

/// Entrywise check of X^2 + eI > pi X. Throws NonPositiveEntries.
InequalityCheck matrix_inequality_check(const Mat2& x, long precision = 128);

struct InequalityFuzz {
  std::size_t samples = 0;
  std::size_t holding = 0;
  double max_certificate_gap = 0.0;
  bool all_consistent = true;
  std::vector<Mat2> failures;
};

/// Seeded samples with entries uniform in (0, 10], keeping those with tr X certified > pi.
InequalityFuzz matrix_inequality_fuzz(std::size_t samples, std::uint64_t seed, long precision = 128);

}  // namespace transcert::ybe
