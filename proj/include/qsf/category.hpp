#pragma once

#include "qsf/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qsf {

// Skeletal unitary fusion category: simple labels, fusion multiplicities,
// duals, F/R-symbols, twists, quantum dimensions.  Strict-unit gauge: F with a
// unit leg is the identity, unitors are identities in coordinates.
//
// F-block convention (bit-exact file contract): the left-nested basis vector
// (e,mu,nu) of Hom((a(x)b)(x)c, d) equals
//   sum_{f,rho,sigma} F^{abc}_d[(e,mu,nu),(f,rho,sigma)]
// times the right-nested vector (f,rho,sigma) of Hom(a(x)(b(x)c), d).
// Row order: e ascending, then mu in N_ab^e, then nu in N_ec^d.
// Column order: f ascending, then rho in N_bc^f, then sigma in N_af^d.
//
// R-block convention: R(a,b,c) has shape N_ab^c x N_ba^c and
//   phi^{ab}_{c,mu} o b_{b,a} = sum_nu R(a,b,c)[mu,nu] phi^{ba}_{c,nu}
// for orthonormal fusion-tree bases phi.
class FusionCategoryData {
 public:
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  std::string name;

  bool has_braiding = false;
  bool has_twist = false;
  std::vector<cplx> twist;                  // per label, only if has_twist
  std::optional<std::vector<double>> file_qdim;  // optional values from file

  // Filled by validate(); quantum dimensions are always recomputed from N.
  std::vector<double> qdim;
  bool validated = false;

  int num_labels() const { return static_cast<int>(labels.size()); }
  int label_index(const std::string& s) const;
  int nfus(int a, int b, int c) const;
  void set_nfus(int a, int b, int c, int n);
  void resize_tables();

  // Triples of (internal label, first vertex slot, second vertex slot) that
  // index F rows/cols.
  struct PathIndex {
    int mid, first, second;
  };
  std::vector<PathIndex> f_rows(int a, int b, int c, int d) const;  // (e,mu,nu)
  std::vector<PathIndex> f_cols(int a, int b, int c, int d) const;  // (f,rho,sigma)

  // Identity when not stored (includes every block with a unit leg).
  CMatrix F(int a, int b, int c, int d) const;
  const CMatrix* stored_F(int a, int b, int c, int d) const;
  void set_F(int a, int b, int c, int d, CMatrix block);

  CMatrix R(int a, int b, int c) const;
  const CMatrix* stored_R(int a, int b, int c) const;
  void set_R(int a, int b, int c, CMatrix block);

  // Keys of all stored nontrivial F blocks (for perturbation tests and IO).
  std::vector<std::array<int, 4>> stored_F_keys() const;
  std::vector<std::array<int, 3>> stored_R_keys() const;

  void compute_qdims();  // Perron-Frobenius eigenvalue of each fusion matrix

 private:
  std::vector<int> fusion_;  // N[a*L*L + b*L + c]
  std::unordered_map<uint64_t, CMatrix> fblocks_;
  std::unordered_map<uint64_t, CMatrix> rblocks_;
};

struct ValidationReport {
  double pentagon_residual = 0.0;
  double hexagon_residual = 0.0;
  double f_unitarity_residual = 0.0;
  double r_unitarity_residual = 0.0;
  double unit_gauge_residual = 0.0;
  double twist_residual = 0.0;
  double qdim_residual = 0.0;  // vs optional file values
  std::vector<double> qdim;
  bool accepted = false;
  std::string worst;  // worst offending identity instance, when rejected
};

// Checks structural invariants, F/R unitarity, pentagon/hexagon coherence and
// computes quantum dimensions.  Marks the category validated when accepted.
// Throws MalformedData on structurally broken input.
ValidationReport validate(FusionCategoryData& cat, double tol_eq = tol::morphism);

// Built-in gallery: "hilb", "repz2", "fib", "ising", "veczN" or "veczN.K"
// (N <= 12, 0 <= K < N, cocycle exponent K; default K = 0).
FusionCategoryData builtin(const std::string& name);
FusionCategoryData builtin_vec_zn(int n, int k = 0);

// Twist of a simple from braiding and duality data:
//   theta_a = (1/d_a) sum_c d_c tr(R(a,a,c)).
// Cross-checked against stored twist data when present.
cplx compute_simple_twist(const FusionCategoryData& cat, int a);

// A formal direct sum of simple labels with multiplicities.  Duplicate labels
// merge in first-occurrence order.
struct SumObject {
  const FusionCategoryData* cat = nullptr;
  std::vector<std::pair<int, int>> summands;  // (label, mult >= 1)

  SumObject() = default;
  SumObject(const FusionCategoryData& c, std::vector<std::pair<int, int>> s);
  static SumObject simple(const FusionCategoryData& c, int label) {
    return SumObject(c, {{label, 1}});
  }
  static SumObject unit_object(const FusionCategoryData& c) {
    return SumObject::simple(c, c.unit);
  }

  int mult_of(int label) const;
  int total_copies() const;
  bool is_unit_object() const;
  SumObject dualized() const;
  bool operator==(const SumObject& o) const;
};

// Sum of mult_i * d_i over the summands.
double object_dimension(const SumObject& x);

}  // namespace qsf
