#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsf {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Global tolerance defaults. 1e-9 for equalities of morphisms, 1e-8 for
// derived quantities; both overridable per call.
namespace tol {
inline constexpr double morphism = 1e-9;
inline constexpr double derived = 1e-8;
inline constexpr double hermitian = 1e-10;
inline constexpr double eig_clamp = 1e-10;
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonHermitian : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct MalformedData : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct NoBraiding : Error { using Error::Error; };
struct NotLength3 : Error { using Error::Error; };
struct WordTooLong : Error { using Error::Error; };
struct NotEndomorphism : Error { using Error::Error; };
struct NotHaploid : Error { using Error::Error; };
struct NotRigid : Error { using Error::Error; };
struct NotCommutative : Error { using Error::Error; };
struct UnsupportedAmbient : Error { using Error::Error; };
struct NumericalFailure : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };

// Largest singular value.
double op_norm(const CMatrix& m);

// Hermitian eigendecomposition, eigenvalues ascending.  M = V diag(l) V^dag.
std::pair<std::vector<double>, CMatrix> herm_eig(const CMatrix& m,
                                                 double tol_herm = tol::hermitian);

// Positive square root of a PSD Hermitian matrix.  Eigenvalues in
// (-tol::eig_clamp, 0) are clamped to zero; below -1e-8 throws NotPSD.
CMatrix psd_sqrt(const CMatrix& m);

// M = U P with U unitary and P = psd_sqrt(M^dag M).  Throws Singular when the
// smallest singular value is below 1e-10.
std::pair<CMatrix, CMatrix> polar(const CMatrix& m);

// Ordered list of square blocks, one per simple label of a fixed label order.
// Empty (0x0) blocks stand for absent labels.
struct BlockDiag {
  std::vector<CMatrix> blocks;

  BlockDiag() = default;
  explicit BlockDiag(std::vector<CMatrix> b) : blocks(std::move(b)) {}

  static BlockDiag identity(const std::vector<int>& sizes);

  BlockDiag& operator+=(const BlockDiag& o);
  BlockDiag& operator-=(const BlockDiag& o);
  BlockDiag& operator*=(cplx c);
  friend BlockDiag operator+(BlockDiag a, const BlockDiag& b) { return a += b; }
  friend BlockDiag operator-(BlockDiag a, const BlockDiag& b) { return a -= b; }
  friend BlockDiag operator*(cplx c, BlockDiag a) { return a *= c; }

  BlockDiag adjoint() const;
  double op_norm() const;            // max over blocks
  double min_herm_eig() const;       // min eigenvalue over Hermitian blocks
  cplx fro_dot(const BlockDiag& o) const;  // sum_i tr(blocks[i]^dag o.blocks[i])
  bool same_shape(const BlockDiag& o) const;
};

double op_norm(const BlockDiag& b);

struct PowerIterateResult {
  BlockDiag direction;  // normalized, op_norm == 1
  double rate = 0.0;    // eigenvalue of L on the fixed direction
  int iterations = 0;
};

// Power iteration for a positive linear map L on block-diagonal matrices.
// Iterates (id + L) and renormalizes each step; converges for irreducible
// positive maps with possibly peripheral spectrum.
PowerIterateResult power_iterate(const std::function<BlockDiag(const BlockDiag&)>& L,
                                 const BlockDiag& start, int max_iter = 10000,
                                 double tol_fix = 1e-12);

}  // namespace qsf
