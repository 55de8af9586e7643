#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "isingbraid/cyclo.hpp"

namespace Eigen {

template <>
struct NumTraits<ising::Cyclo> : GenericNumTraits<ising::Cyclo> {
  typedef ising::Cyclo Real;
  typedef ising::Cyclo NonInteger;
  typedef ising::Cyclo Nested;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 120
  };
  static inline ising::Cyclo epsilon() { return ising::Cyclo(0); }
  static inline ising::Cyclo dummy_precision() { return ising::Cyclo(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ising {

/// Dense square matrix over the exact cyclotomic field; braid generators,
/// projectors and gates all live here.
using CMatrix = Eigen::Matrix<Cyclo, Eigen::Dynamic, Eigen::Dynamic>;

using ComplexMatrix = Eigen::MatrixXcd;

CMatrix c_identity(Eigen::Index n);

/// Exact matrix product.  Skips zero operands, which matters a lot for the
/// braid generators (diagonal or two entries per row).
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix mat_dagger(const CMatrix& a);

bool mat_equal(const CMatrix& a, const CMatrix& b);

bool is_zero(const CMatrix& a);

/// M * M^dagger == I, exactly.
bool is_unitary(const CMatrix& m);

/// Kronecker product with the first factor most significant:
/// (A (x) B)[i*nb+k][j*nb+l] = A[i][j] * B[k][l].
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> r(a.rows() * b.rows(),
                                                          a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

/// If a == lambda * b for a unit scalar lambda of the field, returns lambda
/// (lambda = 1 when the matrices are exactly equal); nullopt otherwise.
/// The candidate is read off the first nonzero entry of b (row-major) and
/// then verified on every entry.
std::optional<Cyclo> equal_up_to_phase(const CMatrix& a, const CMatrix& b);

/// Deterministic canonical serialization; usable as a deduplication key.
std::string matrix_key(const CMatrix& m);

/// Key that is invariant under rescaling by any nonzero field scalar:
/// the matrix is gauged so its first nonzero entry (row-major) becomes 1.
std::string phase_gauged_key(const CMatrix& m);

/// Same gauge as phase_gauged_key, as a matrix.
CMatrix phase_gauge(const CMatrix& m);

/// Exact rank over the field, by fraction-free Gaussian elimination.
Eigen::Index exact_rank(CMatrix m);

/// Floating-point embedding at zeta = exp(i*pi/4).
ComplexMatrix embed(const CMatrix& m);

}  // namespace ising
