#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

// Dense pencil analysis toolkit. Everything is templated on the scalar
// (double or std::complex<double>); the adjoint of a matrix is the plain
// transpose over the reals and the conjugate transpose over the complexes,
// which is exactly Eigen's adjoint().

namespace dhp {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMat = Mat<double>;
using ComplexMat = Mat<Complex>;
using RealVec = Vec<double>;
using ComplexVec = Vec<Complex>;

template <typename Scalar>
inline constexpr bool is_complex_v = !std::is_same_v<Scalar, typename Eigen::NumTraits<Scalar>::Real>;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};
class NonSquare : public Error {
 public:
  using Error::Error;
};
class NotHermitian : public Error {
 public:
  using Error::Error;
};
class NotPsd : public Error {
 public:
  using Error::Error;
};
class ColumnsNotOrthonormal : public Error {
 public:
  using Error::Error;
};
class SingularPencil : public Error {
 public:
  using Error::Error;
};
class StructureViolated : public Error {
 public:
  using Error::Error;
};
class BothNonnegInfeasible : public Error {
 public:
  using Error::Error;
};
class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};
class IndexTooHigh : public Error {
 public:
  using Error::Error;
};
class RangeConditionViolated : public Error {
 public:
  using Error::Error;
};
class SymmetricModeInfeasible : public Error {
 public:
  using Error::Error;
};
class InfeasibleDimensions : public Error {
 public:
  using Error::Error;
};
class UnknownFixture : public Error {
 public:
  using Error::Error;
};
class InvalidParams : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerance

// Numerical rank and residual decisions use the standard mixed threshold
// max(m,n) * relative * sigma_max + absolute.
struct Tolerance {
  double relative = 1e-10;
  double absolute = 1e-13;

  Tolerance() = default;
  Tolerance(double rel, double abs) : relative(rel), absolute(abs) {
    if (!(rel >= 0.0) || !(abs >= 0.0) || !std::isfinite(rel) || !std::isfinite(abs))
      throw InvalidInput("tolerance entries must be finite and nonnegative");
  }

  double rank_threshold(Index rows, Index cols, double sigma_max) const {
    return static_cast<double>(std::max(rows, cols)) * relative * sigma_max + absolute;
  }
  double residual_threshold(double scale) const { return relative * scale + absolute; }
};

// ---------------------------------------------------------------------------
// Small helpers

template <typename Scalar>
bool all_finite(const Mat<Scalar>& a) {
  return a.allFinite();
}

template <typename Scalar>
void require_finite(const Mat<Scalar>& a, const char* what) {
  if (!all_finite(a)) throw InvalidInput(std::string(what) + ": non-finite entries");
}

template <typename Scalar>
void require_square(const Mat<Scalar>& a, const char* what) {
  if (a.rows() != a.cols()) throw NonSquare(std::string(what) + ": matrix must be square");
}

template <typename Scalar>
void require_same_shape(const Mat<Scalar>& a, const Mat<Scalar>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInput(std::string(what) + ": shape mismatch");
}

inline ComplexMat to_complex(const RealMat& a) { return a.cast<Complex>(); }
inline const ComplexMat& to_complex(const ComplexMat& a) { return a; }

inline double max_imag(const ComplexMat& a) {
  if (a.size() == 0) return 0.0;
  return a.imag().cwiseAbs().maxCoeff();
}

// Returns the real part when all imaginary parts are below the threshold.
inline std::optional<RealMat> demote_to_real(const ComplexMat& a, double threshold) {
  if (max_imag(a) > threshold) return std::nullopt;
  return RealMat(a.real());
}

template <typename Scalar>
Mat<Scalar> hermitian_part(const Mat<Scalar>& a) {
  return Mat<Scalar>(0.5 * (a + a.adjoint()));
}

template <typename Scalar>
Mat<Scalar> skew_part(const Mat<Scalar>& a) {
  return Mat<Scalar>(0.5 * (a - a.adjoint()));
}

// ---------------------------------------------------------------------------
// Deterministic random generators (used by fixtures, tests and generators)

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  Index integer(Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(engine_);
  }

  template <typename Scalar>
  Scalar scalar() {
    if constexpr (is_complex_v<Scalar>)
      return Scalar(normal(), normal());
    else
      return normal();
  }

  template <typename Scalar>
  Mat<Scalar> matrix(Index rows, Index cols) {
    Mat<Scalar> a(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) a(i, j) = scalar<Scalar>();
    return a;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

template <typename Scalar>
Mat<Scalar> random_unitary(Index n, Rng& rng) {
  if (n == 0) return Mat<Scalar>(0, 0);
  Mat<Scalar> a = rng.matrix<Scalar>(n, n);
  Eigen::HouseholderQR<Mat<Scalar>> qr(a);
  Mat<Scalar> q = qr.householderQ() * Mat<Scalar>::Identity(n, n);
  // Fix the phase of each column so the factor is unique given the input.
  Mat<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    Scalar d = r(j, j);
    double m = std::abs(d);
    if (m > 0) q.col(j) *= d / Scalar(m);
  }
  return q;
}

// Random invertible matrix with singular values in [1/kappa, 1].
template <typename Scalar>
Mat<Scalar> random_invertible(Index n, Rng& rng, double kappa = 10.0) {
  if (n == 0) return Mat<Scalar>(0, 0);
  Mat<Scalar> u = random_unitary<Scalar>(n, rng);
  Mat<Scalar> v = random_unitary<Scalar>(n, rng);
  RealVec s(n);
  for (Index i = 0; i < n; ++i) s(i) = std::exp(rng.uniform(-std::log(kappa), 0.0));
  return u * s.asDiagonal() * v.adjoint();
}

template <typename Scalar>
Mat<Scalar> random_psd(Index n, Rng& rng, Index rank = -1) {
  if (rank < 0 || rank > n) rank = n;
  if (n == 0) return Mat<Scalar>(0, 0);
  Mat<Scalar> g = rng.matrix<Scalar>(rank, n);
  return Mat<Scalar>(g.adjoint() * g / std::max<double>(1.0, static_cast<double>(n)));
}

}  // namespace dhp
