#include "qsf/category.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qsf {

namespace {

uint64_t key4(int a, int b, int c, int d) {
  return (uint64_t(a) << 48) | (uint64_t(b) << 32) | (uint64_t(c) << 16) | uint64_t(d);
}
uint64_t key3(int a, int b, int c) { return key4(a, b, c, 0); }

}  // namespace

int FusionCategoryData::label_index(const std::string& s) const {
  for (int i = 0; i < num_labels(); ++i)
    if (labels[i] == s) return i;
  throw MalformedData("unknown label '" + s + "'");
}

void FusionCategoryData::resize_tables() {
  int l = num_labels();
  fusion_.assign(size_t(l) * l * l, 0);
  if (dual.empty()) dual.assign(l, 0);
}

int FusionCategoryData::nfus(int a, int b, int c) const {
  int l = num_labels();
  if (a < 0 || b < 0 || c < 0 || a >= l || b >= l || c >= l)
    throw MalformedData("fusion index out of range");
  return fusion_[(size_t(a) * l + b) * l + c];
}

void FusionCategoryData::set_nfus(int a, int b, int c, int n) {
  int l = num_labels();
  if (a < 0 || b < 0 || c < 0 || a >= l || b >= l || c >= l)
    throw MalformedData("fusion index out of range");
  fusion_[(size_t(a) * l + b) * l + c] = n;
}

std::vector<FusionCategoryData::PathIndex> FusionCategoryData::f_rows(int a, int b, int c,
                                                                      int d) const {
  std::vector<PathIndex> out;
  for (int e = 0; e < num_labels(); ++e) {
    int n1 = nfus(a, b, e), n2 = nfus(e, c, d);
    for (int mu = 0; mu < n1; ++mu)
      for (int nu = 0; nu < n2; ++nu) out.push_back({e, mu, nu});
  }
  return out;
}

std::vector<FusionCategoryData::PathIndex> FusionCategoryData::f_cols(int a, int b, int c,
                                                                      int d) const {
  std::vector<PathIndex> out;
  for (int f = 0; f < num_labels(); ++f) {
    int n1 = nfus(b, c, f), n2 = nfus(a, f, d);
    for (int rho = 0; rho < n1; ++rho)
      for (int sigma = 0; sigma < n2; ++sigma) out.push_back({f, rho, sigma});
  }
  return out;
}

const CMatrix* FusionCategoryData::stored_F(int a, int b, int c, int d) const {
  auto it = fblocks_.find(key4(a, b, c, d));
  return it == fblocks_.end() ? nullptr : &it->second;
}

CMatrix FusionCategoryData::F(int a, int b, int c, int d) const {
  if (const CMatrix* m = stored_F(a, b, c, d)) return *m;
  size_t r = f_rows(a, b, c, d).size(), k = f_cols(a, b, c, d).size();
  if (r != k)
    throw MalformedData("fusion multiplicities inconsistent: F block (" + labels[a] + "," +
                        labels[b] + "," + labels[c] + ";" + labels[d] + ") is " +
                        std::to_string(r) + "x" + std::to_string(k));
  return CMatrix::Identity(r, r);
}

void FusionCategoryData::set_F(int a, int b, int c, int d, CMatrix block) {
  size_t r = f_rows(a, b, c, d).size(), k = f_cols(a, b, c, d).size();
  if (size_t(block.rows()) != r || size_t(block.cols()) != k)
    throw MalformedData("F block shape mismatch");
  fblocks_[key4(a, b, c, d)] = std::move(block);
}

const CMatrix* FusionCategoryData::stored_R(int a, int b, int c) const {
  auto it = rblocks_.find(key3(a, b, c));
  return it == rblocks_.end() ? nullptr : &it->second;
}

CMatrix FusionCategoryData::R(int a, int b, int c) const {
  if (!has_braiding) throw NoBraiding("category '" + name + "' has no braiding data");
  if (const CMatrix* m = stored_R(a, b, c)) return *m;
  int r = nfus(a, b, c), k = nfus(b, a, c);
  if (a == unit || b == unit) {
    // Braiding with the unit is trivial.
    if (r != k) throw MalformedData("fusion not unit-symmetric");
    return CMatrix::Identity(r, r);
  }
  throw MalformedData("missing R block (" + labels[a] + "," + labels[b] + ";" + labels[c] +
                      ")");
}

void FusionCategoryData::set_R(int a, int b, int c, CMatrix block) {
  if (block.rows() != nfus(a, b, c) || block.cols() != nfus(b, a, c))
    throw MalformedData("R block shape mismatch");
  rblocks_[key3(a, b, c)] = std::move(block);
  has_braiding = true;
}

std::vector<std::array<int, 4>> FusionCategoryData::stored_F_keys() const {
  std::vector<std::array<int, 4>> out;
  for (const auto& [k, v] : fblocks_)
    out.push_back({int(k >> 48), int((k >> 32) & 0xffff), int((k >> 16) & 0xffff),
                   int(k & 0xffff)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 3>> FusionCategoryData::stored_R_keys() const {
  std::vector<std::array<int, 3>> out;
  for (const auto& [k, v] : rblocks_)
    out.push_back({int(k >> 48), int((k >> 32) & 0xffff), int((k >> 16) & 0xffff)});
  std::sort(out.begin(), out.end());
  return out;
}

void FusionCategoryData::compute_qdims() {
  int l = num_labels();
  qdim.assign(l, 1.0);
  for (int a = 0; a < l; ++a) {
    Eigen::MatrixXd na(l, l);
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c) na(b, c) = nfus(a, b, c);
    Eigen::EigenSolver<Eigen::MatrixXd> es(na);
    double rho = 0.0;
    for (int i = 0; i < l; ++i) rho = std::max(rho, std::abs(es.eigenvalues()(i)));
    qdim[a] = rho;
  }
}

namespace {

// Row offset of (e,mu,nu) within f_rows(a,b,c,d) ordering.
int ln_index(const FusionCategoryData& cat, int a, int b, int c, int d, int e, int mu,
             int nu) {
  int off = 0;
  for (int e2 = 0; e2 < e; ++e2) off += cat.nfus(a, b, e2) * cat.nfus(e2, c, d);
  return off + mu * cat.nfus(e, c, d) + nu;
}

int rn_index(const FusionCategoryData& cat, int a, int b, int c, int d, int f, int rho,
             int sigma) {
  int off = 0;
  for (int f2 = 0; f2 < f; ++f2) off += cat.nfus(b, c, f2) * cat.nfus(a, f2, d);
  return off + rho * cat.nfus(a, f, d) + sigma;
}

int ln_dim(const FusionCategoryData& cat, int a, int b, int c, int d) {
  int n = 0;
  for (int e = 0; e < cat.num_labels(); ++e) n += cat.nfus(a, b, e) * cat.nfus(e, c, d);
  return n;
}

struct Worst {
  double value = 0.0;
  std::string what;
  void update(double v, const std::string& w) {
    if (v > value) {
      value = v;
      what = w;
    }
  }
};

std::string labels4(const FusionCategoryData& cat, int a, int b, int c, int d) {
  return "(" + cat.labels[a] + "," + cat.labels[b] + "," + cat.labels[c] + ";" +
         cat.labels[d] + ")";
}

// max_e op_norm(path difference) of the pentagon identity on leaves (a,b,c,d).
void pentagon_check(const FusionCategoryData& cat, int a, int b, int c, int d,
                    Worst& worst) {
  int l = cat.num_labels();
  for (int e = 0; e < l; ++e) {
    // Tree bases for the five nestings with root e.
    struct T {
      int i1, s1, i2, s2, s3;  // inner label/slot, mid label/slot, outer slot
    };
    std::vector<T> t1, t2, t3, t4, t5;
    for (int g = 0; g < l; ++g)
      for (int h = 0; h < l; ++h)
        for (int mu = 0; mu < cat.nfus(a, b, g); ++mu)
          for (int nu = 0; nu < cat.nfus(g, c, h); ++nu)
            for (int rho = 0; rho < cat.nfus(h, d, e); ++rho)
              t1.push_back({g, mu, h, nu, rho});
    for (int i = 0; i < l; ++i)
      for (int h = 0; h < l; ++h)
        for (int be = 0; be < cat.nfus(b, c, i); ++be)
          for (int al = 0; al < cat.nfus(a, i, h); ++al)
            for (int rho = 0; rho < cat.nfus(h, d, e); ++rho)
              t2.push_back({i, be, h, al, rho});
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        for (int be = 0; be < cat.nfus(b, c, i); ++be)
          for (int x = 0; x < cat.nfus(i, d, j); ++x)
            for (int y = 0; y < cat.nfus(a, j, e); ++y) t3.push_back({i, be, j, x, y});
    for (int k = 0; k < l; ++k)
      for (int m = 0; m < l; ++m)
        for (int ka = 0; ka < cat.nfus(c, d, k); ++ka)
          for (int be = 0; be < cat.nfus(b, k, m); ++be)
            for (int y = 0; y < cat.nfus(a, m, e); ++y) t4.push_back({k, ka, m, be, y});
    for (int g = 0; g < l; ++g)
      for (int k = 0; k < l; ++k)
        for (int mu = 0; mu < cat.nfus(a, b, g); ++mu)
          for (int ka = 0; ka < cat.nfus(c, d, k); ++ka)
            for (int z = 0; z < cat.nfus(g, k, e); ++z) t5.push_back({g, mu, k, ka, z});
    if (t1.empty() && t4.empty()) continue;
    if (t1.size() != t4.size()) {
      worst.update(1.0, "fusion path count mismatch " + labels4(cat, a, b, c, d));
      continue;
    }
    size_t n = t1.size();
    if (n == 0) continue;

    CMatrix m12 = CMatrix::Zero(n, t2.size());
    for (size_t r = 0; r < n; ++r) {
      auto [g, mu, h, nu, rho] = t1[r];
      CMatrix f = cat.F(a, b, c, h);
      for (size_t q = 0; q < t2.size(); ++q) {
        auto [i, be, h2, al, rho2] = t2[q];
        if (h2 != h || rho2 != rho) continue;
        m12(r, q) = f(ln_index(cat, a, b, c, h, g, mu, nu),
                      rn_index(cat, a, b, c, h, i, be, al));
      }
    }
    CMatrix m23 = CMatrix::Zero(t2.size(), t3.size());
    for (size_t r = 0; r < t2.size(); ++r) {
      auto [i, be, h, al, rho] = t2[r];
      CMatrix f = cat.F(a, i, d, e);
      for (size_t q = 0; q < t3.size(); ++q) {
        auto [i2, be2, j, x, y] = t3[q];
        if (i2 != i || be2 != be) continue;
        m23(r, q) =
            f(ln_index(cat, a, i, d, e, h, al, rho), rn_index(cat, a, i, d, e, j, x, y));
      }
    }
    CMatrix m34 = CMatrix::Zero(t3.size(), t4.size());
    for (size_t r = 0; r < t3.size(); ++r) {
      auto [i, be, j, x, y] = t3[r];
      CMatrix f = cat.F(b, c, d, j);
      for (size_t q = 0; q < t4.size(); ++q) {
        auto [k, ka, m, be4, y4] = t4[q];
        if (m != j || y4 != y) continue;
        m34(r, q) =
            f(ln_index(cat, b, c, d, j, i, be, x), rn_index(cat, b, c, d, j, k, ka, be4));
      }
    }
    CMatrix m15 = CMatrix::Zero(n, t5.size());
    for (size_t r = 0; r < n; ++r) {
      auto [g, mu, h, nu, rho] = t1[r];
      CMatrix f = cat.F(g, c, d, e);
      for (size_t q = 0; q < t5.size(); ++q) {
        auto [g2, mu2, k, ka, z] = t5[q];
        if (g2 != g || mu2 != mu) continue;
        m15(r, q) =
            f(ln_index(cat, g, c, d, e, h, nu, rho), rn_index(cat, g, c, d, e, k, ka, z));
      }
    }
    CMatrix m54 = CMatrix::Zero(t5.size(), t4.size());
    for (size_t r = 0; r < t5.size(); ++r) {
      auto [g, mu, k, ka, z] = t5[r];
      CMatrix f = cat.F(a, b, k, e);
      for (size_t q = 0; q < t4.size(); ++q) {
        auto [k2, ka2, m, be4, y] = t4[q];
        if (k2 != k || ka2 != ka) continue;
        m54(r, q) =
            f(ln_index(cat, a, b, k, e, g, mu, z), rn_index(cat, a, b, k, e, m, be4, y));
      }
    }
    double resid = op_norm(CMatrix(m12 * m23 * m34 - m15 * m54));
    worst.update(resid, "pentagon " + labels4(cat, a, b, c, d) + " root " + cat.labels[e]);
  }
}

// Hexagon coherence for leaves (x,y,z) and root d.  Checks both hexagons via
// the elementary-move matrices between the six intermediate nestings.
void hexagon_check(const FusionCategoryData& cat, int x, int y, int z, int d,
                   Worst& worst) {
  int l = cat.num_labels();
  auto ln = [&](int p, int q, int r) { return cat.f_rows(p, q, r, d); };
  auto rn = [&](int p, int q, int r) { return cat.f_cols(p, q, r, d); };

  // Braid move on the inner vertex of a left-nested word:
  //   ((p,q),r) -> ((q,p),r), rows target trees, cols source trees.
  auto braid_inner_left = [&](int p, int q, int r) {
    auto src = ln(p, q, r), tgt = ln(q, p, r);
    CMatrix m = CMatrix::Zero(tgt.size(), src.size());
    for (size_t i = 0; i < tgt.size(); ++i)
      for (size_t j = 0; j < src.size(); ++j) {
        if (tgt[i].mid != src[j].mid || tgt[i].second != src[j].second) continue;
        m(i, j) = cat.R(q, p, tgt[i].mid)(tgt[i].first, src[j].first);
      }
    return m;
  };
  // H1: b_{x, y(x)z} composed from elementary moves vs. its channel form.
  {
    CMatrix a1 = cat.F(x, y, z, d);                     // RN(x,y,z) -> LN(x,y,z)
    CMatrix b1 = braid_inner_left(x, y, z);            // LN(x,y,z) -> LN(y,x,z)
    CMatrix a2 = cat.F(y, x, z, d).adjoint();          // LN(y,x,z) -> RN(y,x,z)
    // RN(y,x,z) -> RN(y,z,x): inner (x,z->f) -> (z,x->f).
    auto src = rn(y, x, z), tgt = rn(y, z, x);
    CMatrix b2 = CMatrix::Zero(tgt.size(), src.size());
    for (size_t i = 0; i < tgt.size(); ++i)
      for (size_t j = 0; j < src.size(); ++j) {
        if (tgt[i].mid != src[j].mid || tgt[i].second != src[j].second) continue;
        b2(i, j) = cat.R(z, x, tgt[i].mid)(tgt[i].first, src[j].first);
      }
    CMatrix a3 = cat.F(y, z, x, d);                    // RN(y,z,x) -> LN(y,z,x)
    CMatrix lhs = a3 * b2 * a2 * b1 * a1;

    auto from = rn(x, y, z);                           // (f, rho, sigma)
    auto to = ln(y, z, x);                             // (f, rho, nu)
    CMatrix rhs = CMatrix::Zero(to.size(), from.size());
    for (size_t i = 0; i < to.size(); ++i)
      for (size_t j = 0; j < from.size(); ++j) {
        if (to[i].mid != from[j].mid || to[i].first != from[j].first) continue;
        rhs(i, j) = cat.R(to[i].mid, x, d)(to[i].second, from[j].second);
      }
    worst.update(op_norm(CMatrix(lhs - rhs)),
                 "hexagon-1 " + labels4(cat, x, y, z, d));
  }

  // H2: b_{x(x)y, z} composed from elementary moves vs. its channel form.
  {
    CMatrix a1 = cat.F(x, y, z, d).adjoint();          // LN(x,y,z) -> RN(x,y,z)
    // RN(x,y,z) -> RN(x,z,y): inner (y,z->f) -> (z,y->f).
    auto src = rn(x, y, z), tgt = rn(x, z, y);
    CMatrix b1 = CMatrix::Zero(tgt.size(), src.size());
    for (size_t i = 0; i < tgt.size(); ++i)
      for (size_t j = 0; j < src.size(); ++j) {
        if (tgt[i].mid != src[j].mid || tgt[i].second != src[j].second) continue;
        b1(i, j) = cat.R(z, y, tgt[i].mid)(tgt[i].first, src[j].first);
      }
    CMatrix a2 = cat.F(x, z, y, d);                    // RN(x,z,y) -> LN(x,z,y)
    CMatrix b2 = braid_inner_left(x, z, y);            // LN(x,z,y) -> LN(z,x,y)
    CMatrix a3 = cat.F(z, x, y, d).adjoint();          // LN(z,x,y) -> RN(z,x,y)
    CMatrix lhs = a3 * b2 * a2 * b1 * a1;

    auto from = ln(x, y, z);                           // (e, mu, sigma')
    auto to = rn(z, x, y);                             // (e, rho, sigma)
    CMatrix rhs = CMatrix::Zero(to.size(), from.size());
    for (size_t i = 0; i < to.size(); ++i)
      for (size_t j = 0; j < from.size(); ++j) {
        if (to[i].mid != from[j].mid || to[i].first != from[j].first) continue;
        rhs(i, j) = cat.R(z, to[i].mid, d)(to[i].second, from[j].second);
      }
    worst.update(op_norm(CMatrix(lhs - rhs)),
                 "hexagon-2 " + labels4(cat, x, y, z, d));
  }
}

}  // namespace

ValidationReport validate(FusionCategoryData& cat, double tol_eq) {
  int l = cat.num_labels();
  if (l == 0) throw MalformedData("no labels");
  if (cat.unit < 0 || cat.unit >= l) throw MalformedData("unit out of range");
  if (int(cat.dual.size()) != l) throw MalformedData("dual table size mismatch");
  for (int a = 0; a < l; ++a)
    if (cat.dual[a] < 0 || cat.dual[a] >= l || cat.dual[cat.dual[a]] != a)
      throw MalformedData("dual table is not an involution");

  ValidationReport rep;
  Worst worst;
  int u = cat.unit;

  // Fusion-ring invariants.
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      if (cat.nfus(u, a, b) != (a == b ? 1 : 0) || cat.nfus(a, u, b) != (a == b ? 1 : 0))
        worst.update(1.0, "unit fusion rule at (" + cat.labels[a] + "," + cat.labels[b] + ")");
      for (int c = 0; c < l; ++c)
        if (cat.nfus(a, b, c) != cat.nfus(cat.dual[b], cat.dual[a], cat.dual[c]))
          worst.update(1.0, "dual symmetry of fusion at (" + cat.labels[a] + "," +
                                cat.labels[b] + ";" + cat.labels[c] + ")");
    }
    if (cat.nfus(a, cat.dual[a], u) != 1)
      worst.update(1.0, "N_{a abar}^1 != 1 at " + cat.labels[a]);
  }

  // F blocks: square, unitary, identity on unit legs.
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c)
        for (int d = 0; d < l; ++d) {
          auto rows = cat.f_rows(a, b, c, d);
          auto cols = cat.f_cols(a, b, c, d);
          if (rows.size() != cols.size())
            throw MalformedData("non-square F block " + labels4(cat, a, b, c, d));
          if (rows.empty()) continue;
          const CMatrix* st = cat.stored_F(a, b, c, d);
          if (!st) continue;  // identity fallback is unitary and gauge-correct
          if (size_t(st->rows()) != rows.size() || size_t(st->cols()) != cols.size())
            throw MalformedData("F block shape mismatch " + labels4(cat, a, b, c, d));
          double ures = op_norm(
              CMatrix(st->adjoint() * (*st) - CMatrix::Identity(rows.size(), rows.size())));
          rep.f_unitarity_residual = std::max(rep.f_unitarity_residual, ures);
          if (ures > tol_eq) worst.update(ures, "F unitarity " + labels4(cat, a, b, c, d));
          if (a == u || b == u || c == u) {
            double gres = op_norm(
                CMatrix(*st - CMatrix::Identity(rows.size(), rows.size())));
            rep.unit_gauge_residual = std::max(rep.unit_gauge_residual, gres);
            if (gres > tol_eq)
              worst.update(gres, "strict-unit gauge " + labels4(cat, a, b, c, d));
          }
        }

  // Pentagon.
  {
    Worst pent;
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b)
        for (int c = 0; c < l; ++c)
          for (int d = 0; d < l; ++d) pentagon_check(cat, a, b, c, d, pent);
    rep.pentagon_residual = pent.value;
    if (pent.value > tol_eq) worst.update(pent.value, pent.what);
  }

  // R blocks and hexagons.
  if (cat.has_braiding) {
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b)
        for (int c = 0; c < l; ++c) {
          int n = cat.nfus(a, b, c);
          if (n == 0) continue;
          if (cat.nfus(b, a, c) != n)
            throw MalformedData("braided category with non-symmetric fusion");
          CMatrix r = cat.R(a, b, c);
          double ures = op_norm(CMatrix(r.adjoint() * r - CMatrix::Identity(n, n)));
          rep.r_unitarity_residual = std::max(rep.r_unitarity_residual, ures);
          if (ures > tol_eq)
            worst.update(ures, "R unitarity (" + cat.labels[a] + "," + cat.labels[b] + ";" +
                                   cat.labels[c] + ")");
        }
    Worst hex;
    for (int x = 0; x < l; ++x)
      for (int y = 0; y < l; ++y)
        for (int z = 0; z < l; ++z)
          for (int d = 0; d < l; ++d) hexagon_check(cat, x, y, z, d, hex);
    rep.hexagon_residual = hex.value;
    if (hex.value > tol_eq) worst.update(hex.value, hex.what);
  }

  // Quantum dimensions, always recomputed from N.
  cat.compute_qdims();
  rep.qdim = cat.qdim;
  if (cat.file_qdim) {
    if (int(cat.file_qdim->size()) != l) throw MalformedData("qdim table size mismatch");
    for (int a = 0; a < l; ++a)
      rep.qdim_residual =
          std::max(rep.qdim_residual, std::abs((*cat.file_qdim)[a] - cat.qdim[a]));
    if (rep.qdim_residual > tol::derived)
      worst.update(rep.qdim_residual, "declared quantum dimensions");
  }

  // Twist data: theta_1 = 1 and ribbon consistency with R.
  if (cat.has_twist) {
    if (int(cat.twist.size()) != l) throw MalformedData("twist table size mismatch");
    if (std::abs(cat.twist[u] - cplx(1.0)) > tol_eq)
      worst.update(std::abs(cat.twist[u] - cplx(1.0)), "twist of the unit");
    if (cat.has_braiding) {
      for (int a = 0; a < l; ++a) {
        cplx th = 0.0;
        for (int c = 0; c < l; ++c)
          if (cat.nfus(a, a, c) > 0) th += cat.qdim[c] * cat.R(a, a, c).trace();
        th /= cat.qdim[a];
        double res = std::abs(th - cat.twist[a]);
        rep.twist_residual = std::max(rep.twist_residual, res);
        if (res > tol_eq) worst.update(res, "ribbon identity at " + cat.labels[a]);
      }
    }
  }

  rep.accepted = worst.value <= tol_eq;
  rep.worst = worst.what;
  if (rep.accepted) cat.validated = true;
  return rep;
}

cplx compute_simple_twist(const FusionCategoryData& cat, int a) {
  if (!cat.has_braiding) throw NoBraiding("compute_simple_twist needs braiding data");
  FusionCategoryData& mut = const_cast<FusionCategoryData&>(cat);
  if (cat.qdim.empty()) mut.compute_qdims();
  cplx th = 0.0;
  for (int c = 0; c < cat.num_labels(); ++c)
    if (cat.nfus(a, a, c) > 0) th += cat.qdim[c] * cat.R(a, a, c).trace();
  th /= cat.qdim[a];
  if (cat.has_twist && std::abs(th - cat.twist[a]) > tol::morphism)
    throw ValidationFailed("declared twist at " + cat.labels[a] +
                           " disagrees with braiding data");
  return th;
}

// ---------------------------------------------------------------------------
// Built-in gallery.

FusionCategoryData builtin_vec_zn(int n, int k) {
  if (n < 1 || n > 12 || k < 0 || k >= n) throw UnknownName("vec_zn: need 1 <= n <= 12, 0 <= k < n");
  FusionCategoryData cat;
  cat.name = "vecz" + std::to_string(n) + (k ? "." + std::to_string(k) : "");
  for (int a = 0; a < n; ++a) cat.labels.push_back(std::to_string(a));
  cat.unit = 0;
  cat.dual.resize(n);
  for (int a = 0; a < n; ++a) cat.dual[a] = (n - a) % n;
  cat.resize_tables();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cat.set_nfus(a, b, (a + b) % n, 1);
  if (k != 0) {
    const double pi = std::numbers::pi;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          // Standard representative 3-cocycle on Z_n.
          double phase = 2.0 * pi * k * a * ((b + c) / n) / double(n);
          if (a == 0 || b == 0 || c == 0) continue;
          CMatrix f(1, 1);
          f(0, 0) = std::polar(1.0, phase);
          cat.set_F(a, b, c, (a + b + c) % n, std::move(f));
        }
  }
  validate(cat);
  return cat;
}

namespace {

FusionCategoryData make_hilb() {
  FusionCategoryData cat;
  cat.name = "hilb";
  cat.labels = {"1"};
  cat.unit = 0;
  cat.dual = {0};
  cat.resize_tables();
  cat.set_nfus(0, 0, 0, 1);
  validate(cat);
  return cat;
}

FusionCategoryData make_repz2() {
  FusionCategoryData cat;
  cat.name = "repz2";
  cat.labels = {"+", "-"};
  cat.unit = 0;
  cat.dual = {0, 1};
  cat.resize_tables();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) cat.set_nfus(a, b, a ^ b, 1);
  CMatrix one(1, 1);
  one(0, 0) = 1.0;
  cat.set_R(1, 1, 0, one);  // symmetric braiding, +1 on all channels
  cat.has_twist = true;
  cat.twist = {1.0, 1.0};
  validate(cat);
  return cat;
}

FusionCategoryData make_fib() {
  FusionCategoryData cat;
  cat.name = "fib";
  cat.labels = {"1", "tau"};
  cat.unit = 0;
  cat.dual = {0, 1};
  cat.resize_tables();
  cat.set_nfus(0, 0, 0, 1);
  cat.set_nfus(0, 1, 1, 1);
  cat.set_nfus(1, 0, 1, 1);
  cat.set_nfus(1, 1, 0, 1);
  cat.set_nfus(1, 1, 1, 1);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CMatrix f(2, 2);
  f << 1.0 / phi, 1.0 / std::sqrt(phi), 1.0 / std::sqrt(phi), -1.0 / phi;
  cat.set_F(1, 1, 1, 1, f);
  const double pi = std::numbers::pi;
  CMatrix r(1, 1);
  r(0, 0) = std::polar(1.0, -4.0 * pi / 5.0);
  cat.set_R(1, 1, 0, r);
  r(0, 0) = std::polar(1.0, 3.0 * pi / 5.0);
  cat.set_R(1, 1, 1, r);
  cat.has_twist = true;
  cat.twist = {1.0, std::polar(1.0, 4.0 * pi / 5.0)};
  validate(cat);
  return cat;
}

FusionCategoryData make_ising() {
  FusionCategoryData cat;
  cat.name = "ising";
  cat.labels = {"1", "sigma", "psi"};
  cat.unit = 0;
  cat.dual = {0, 1, 2};
  cat.resize_tables();
  const int I = 0, S = 1, P = 2;
  cat.set_nfus(I, I, I, 1);
  cat.set_nfus(I, S, S, 1);
  cat.set_nfus(I, P, P, 1);
  cat.set_nfus(S, I, S, 1);
  cat.set_nfus(P, I, P, 1);
  cat.set_nfus(S, S, I, 1);
  cat.set_nfus(S, S, P, 1);
  cat.set_nfus(S, P, S, 1);
  cat.set_nfus(P, S, S, 1);
  cat.set_nfus(P, P, I, 1);
  // Tambara-Yamagami data for Z_2 with chi(psi,psi) = -1, kappa = 1.
  CMatrix f(2, 2);
  const double s2 = 1.0 / std::sqrt(2.0);
  f << s2, s2, s2, -s2;  // rows/cols ordered (1, psi)
  cat.set_F(S, S, S, S, f);
  CMatrix neg(1, 1);
  neg(0, 0) = -1.0;
  cat.set_F(S, P, S, P, neg);
  cat.set_F(P, S, P, S, neg);
  const double pi = std::numbers::pi;
  CMatrix r(1, 1);
  r(0, 0) = std::polar(1.0, -pi / 8.0);
  cat.set_R(S, S, I, r);
  r(0, 0) = std::polar(1.0, 3.0 * pi / 8.0);
  cat.set_R(S, S, P, r);
  r(0, 0) = -1.0;
  cat.set_R(P, P, I, r);
  r(0, 0) = cplx(0.0, -1.0);
  cat.set_R(S, P, S, r);
  cat.set_R(P, S, S, r);
  cat.has_twist = true;
  cat.twist = {1.0, std::polar(1.0, pi / 8.0), -1.0};
  validate(cat);
  return cat;
}

}  // namespace

FusionCategoryData builtin(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "hilb") return make_hilb();
  if (n == "repz2") return make_repz2();
  if (n == "fib") return make_fib();
  if (n == "ising") return make_ising();
  if (n.rfind("vecz", 0) == 0) {
    std::string rest = n.substr(4);
    int num = 0, k = 0;
    auto dot = rest.find('.');
    try {
      if (dot == std::string::npos) {
        num = std::stoi(rest);
      } else {
        num = std::stoi(rest.substr(0, dot));
        k = std::stoi(rest.substr(dot + 1));
      }
    } catch (const std::exception&) {
      throw UnknownName("unknown builtin category '" + name + "'");
    }
    return builtin_vec_zn(num, k);
  }
  throw UnknownName("unknown builtin category '" + name + "'");
}

// ---------------------------------------------------------------------------
// SumObject.

SumObject::SumObject(const FusionCategoryData& c, std::vector<std::pair<int, int>> s)
    : cat(&c) {
  for (auto [label, mult] : s) {
    if (label < 0 || label >= c.num_labels())
      throw MalformedData("SumObject: label out of range");
    if (mult < 1) throw MalformedData("SumObject: multiplicity must be >= 1");
    bool merged = false;
    for (auto& [l2, m2] : summands)
      if (l2 == label) {
        m2 += mult;
        merged = true;
        break;
      }
    if (!merged) summands.push_back({label, mult});
  }
  if (summands.empty()) throw MalformedData("SumObject: empty");
}

int SumObject::mult_of(int label) const {
  for (auto [l, m] : summands)
    if (l == label) return m;
  return 0;
}

int SumObject::total_copies() const {
  int n = 0;
  for (auto [l, m] : summands) n += m;
  return n;
}

bool SumObject::is_unit_object() const {
  return summands.size() == 1 && summands[0].first == cat->unit &&
         summands[0].second == 1;
}

SumObject SumObject::dualized() const {
  std::vector<std::pair<int, int>> s;
  for (auto [l, m] : summands) s.push_back({cat->dual[l], m});
  return SumObject(*cat, std::move(s));
}

bool SumObject::operator==(const SumObject& o) const {
  return cat == o.cat && summands == o.summands;
}

double object_dimension(const SumObject& x) {
  if (x.cat->qdim.empty()) const_cast<FusionCategoryData*>(x.cat)->compute_qdims();
  double d = 0.0;
  for (auto [l, m] : x.summands) d += m * x.cat->qdim[l];
  return d;
}

}  // namespace qsf
