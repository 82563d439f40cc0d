#include "qsf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsf {

double op_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

std::pair<std::vector<double>, CMatrix> herm_eig(const CMatrix& m, double tol_herm) {
  if (m.rows() != m.cols()) throw NonHermitian("herm_eig: matrix not square");
  if (op_norm(CMatrix(m - m.adjoint())) > tol_herm)
    throw NonHermitian("herm_eig: matrix not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  if (es.info() != Eigen::Success) throw NumericalFailure("herm_eig: eigensolver failed");
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  return {vals, es.eigenvectors()};
}

CMatrix psd_sqrt(const CMatrix& m) {
  auto [vals, vecs] = herm_eig(m);
  for (double& v : vals) {
    if (v < -1e-8) throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(v));
    if (v < 0.0) v = 0.0;
  }
  Eigen::VectorXd s(vals.size());
  for (int i = 0; i < s.size(); ++i) s(i) = std::sqrt(vals[i]);
  return vecs * s.asDiagonal() * vecs.adjoint();
}

std::pair<CMatrix, CMatrix> polar(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Singular("polar: matrix not square");
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= 1e-10) throw Singular("polar: smallest singular value " + std::to_string(smin));
  CMatrix u = svd.matrixU() * svd.matrixV().adjoint();
  CMatrix p = svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().adjoint();
  return {u, p};
}

BlockDiag BlockDiag::identity(const std::vector<int>& sizes) {
  BlockDiag b;
  b.blocks.reserve(sizes.size());
  for (int n : sizes) b.blocks.push_back(CMatrix::Identity(n, n));
  return b;
}

bool BlockDiag::same_shape(const BlockDiag& o) const {
  if (blocks.size() != o.blocks.size()) return false;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].rows() != o.blocks[i].rows() || blocks[i].cols() != o.blocks[i].cols())
      return false;
  return true;
}

BlockDiag& BlockDiag::operator+=(const BlockDiag& o) {
  if (!same_shape(o)) throw ShapeMismatch("BlockDiag: shape mismatch in +");
  for (size_t i = 0; i < blocks.size(); ++i) blocks[i] += o.blocks[i];
  return *this;
}

BlockDiag& BlockDiag::operator-=(const BlockDiag& o) {
  if (!same_shape(o)) throw ShapeMismatch("BlockDiag: shape mismatch in -");
  for (size_t i = 0; i < blocks.size(); ++i) blocks[i] -= o.blocks[i];
  return *this;
}

BlockDiag& BlockDiag::operator*=(cplx c) {
  for (auto& b : blocks) b *= c;
  return *this;
}

BlockDiag BlockDiag::adjoint() const {
  BlockDiag r;
  r.blocks.reserve(blocks.size());
  for (const auto& b : blocks) r.blocks.push_back(b.adjoint());
  return r;
}

double BlockDiag::op_norm() const {
  double n = 0.0;
  for (const auto& b : blocks) n = std::max(n, qsf::op_norm(b));
  return n;
}

double BlockDiag::min_herm_eig() const {
  double m = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& b : blocks) {
    if (b.rows() == 0) continue;
    any = true;
    auto [vals, vecs] = herm_eig(b);
    m = std::min(m, vals.front());
  }
  return any ? m : 0.0;
}

cplx BlockDiag::fro_dot(const BlockDiag& o) const {
  if (!same_shape(o)) throw ShapeMismatch("BlockDiag: shape mismatch in fro_dot");
  cplx s = 0.0;
  for (size_t i = 0; i < blocks.size(); ++i)
    s += (blocks[i].adjoint() * o.blocks[i]).trace();
  return s;
}

double op_norm(const BlockDiag& b) { return b.op_norm(); }

PowerIterateResult power_iterate(const std::function<BlockDiag(const BlockDiag&)>& L,
                                 const BlockDiag& start, int max_iter, double tol_fix) {
  if (start.op_norm() <= 0.0)
    throw NoConvergence("power_iterate: start vector is zero");
  BlockDiag v = start;
  v *= 1.0 / v.op_norm();
  for (int it = 1; it <= max_iter; ++it) {
    BlockDiag lv = L(v);
    BlockDiag next = v + lv;
    double n = next.op_norm();
    if (n <= 0.0) throw NoConvergence("power_iterate: iterate collapsed to zero");
    next *= 1.0 / n;
    // Rayleigh-style rate estimate in the Frobenius inner product.
    double rate = std::real(v.fro_dot(lv)) / std::real(v.fro_dot(v));
    BlockDiag resid = lv - rate * v;
    if (resid.op_norm() < tol_fix) {
      return {v, rate, it};
    }
    v = next;
  }
  throw NoConvergence("power_iterate: no convergence after " + std::to_string(max_iter) +
                      " iterations");
}

}  // namespace qsf
