#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms with unimodular
// transforms, finitely generated abelian group structure from presentation
// matrices, canonical coset representatives and kernels mod N.

#include "dbraid/errors.hpp"
#include "dbraid/matrix.hpp"
#include "dbraid/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace dbraid {

struct HermiteDecomposition {
  IntMatrix h;  // row-style HNF
  IntMatrix u;  // unimodular, u * a == h
};

// Row-style Hermite normal form. Pivots positive, entries above a pivot
// reduced into [0, pivot).
inline HermiteDecomposition hnf(const IntMatrix& a) {
  HermiteDecomposition r{a, IntMatrix::identity(a.rows())};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // gcd out column `col` among rows >= row
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = row; i < m; ++i)
        if (h(i, col) != 0 && (piv == m || abs(h(i, col)) < abs(h(piv, col)))) piv = i;
      if (piv == m) break;
      h.swap_rows(row, piv);
      u.swap_rows(row, piv);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Int q = h(i, col) / h(row, col);
        if (q != 0) {
          h.add_row(i, row, -q);
          u.add_row(i, row, -q);
        }
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      if (q != 0) {
        h.add_row(i, row, -q);
        u.add_row(i, row, -q);
      }
    }
    ++row;
  }
  return r;
}

struct SmithDecomposition {
  IntMatrix u, v;          // unimodular, u * a * v == d
  IntMatrix d;             // diagonal, d1 | d2 | ... >= 0, zeros trail
  IntMatrix u_inv, v_inv;  // exact inverses, maintained alongside

  std::size_t diag_size() const { return std::min(d.rows(), d.cols()); }
  Int diag(std::size_t i) const { return i < diag_size() ? d(i, i) : Int(0); }
};

// Smith normal form by minimum-absolute-value pivoting.
inline SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition r{IntMatrix::identity(m), IntMatrix::identity(n), a,
                       IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = r.d;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    r.u.swap_rows(i, j);
    r.u_inv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    r.v.swap_cols(i, j);
    r.v_inv.swap_rows(i, j);
  };
  auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {  // row i += c * row j
    d.add_row(i, j, c);
    r.u.add_row(i, j, c);
    r.u_inv.add_col(j, i, -c);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Int& c) {  // col i += c * col j
    d.add_col(i, j, c);
    r.v.add_col(i, j, c);
    r.v_inv.add_row(j, i, -c);
  };
  auto row_negate = [&](std::size_t i) {
    d.negate_row(i);
    r.u.negate_row(i);
    r.u_inv.negate_col(i);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == m) {
        t = steps;  // trailing block is zero
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (q != 0) row_add(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) col_add(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // force the divisibility chain: pivot must divide the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (t == steps) break;
  }
  for (std::size_t i = 0; i < steps; ++i)
    if (d(i, i) < 0) row_negate(i);
  return r;
}

// Structure of a finitely generated abelian group presented as
// Z^ambient / column-span(relations), in SNF coordinates.
struct FgAbGroup {
  std::size_t ambient = 0;
  IntMatrix to_canonical;    // U: ambient vector -> canonical coordinates
  IntMatrix from_canonical;  // U^{-1}
  std::vector<Int> moduli;   // per canonical coordinate: 0 free, 1 dead, >=2 torsion

  static FgAbGroup free_group(std::size_t n) {
    FgAbGroup g;
    g.ambient = n;
    g.to_canonical = g.from_canonical = IntMatrix::identity(n);
    g.moduli.assign(n, Int(0));
    return g;
  }

  // abstract finite group with the given cyclic factors (need not be a chain)
  static FgAbGroup from_factors(const std::vector<Int>& factors) {
    IntMatrix d(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
    SmithDecomposition s = snf(d);
    FgAbGroup g;
    g.ambient = factors.size();
    g.to_canonical = s.u;
    g.from_canonical = s.u_inv;
    g.moduli.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) g.moduli[i] = s.diag(i);
    return g;
  }

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count(moduli.begin(), moduli.end(), Int(0)));
  }

  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    for (const auto& d : moduli)
      if (d >= 2) f.push_back(d);
    return f;
  }

  bool finite() const { return rank() == 0; }
  bool trivial() const { return finite() && invariant_factors().empty(); }

  Int torsion_order() const {
    Int o = 1;
    for (const auto& d : moduli)
      if (d >= 2) o *= d;
    return o;
  }

  // exponent of the torsion part (1 when torsion-free)
  Int exponent() const {
    Int e = 1;
    for (const auto& d : moduli)
      if (d >= 2) e = lcm(e, d);
    return e;
  }

  // canonical coordinates of the coset of v: torsion residues in [0, d_i),
  // dead coordinates zeroed, free coordinates passed through
  std::vector<Int> canonical(const std::vector<Int>& v) const {
    if (v.size() != ambient) throw Error(errc::dimension_mismatch, "coset vector has wrong length");
    std::vector<Int> c = to_canonical.apply(v);
    for (std::size_t i = 0; i < ambient; ++i)
      if (moduli[i] >= 1) c[i] = mod_floor(c[i], moduli[i]);
    return c;
  }

  // deterministic ambient representative of the coset of v
  std::vector<Int> canonical_rep(const std::vector<Int>& v) const {
    return from_canonical.apply(canonical(v));
  }

  bool same_coset(const std::vector<Int>& v, const std::vector<Int>& w) const {
    return canonical(v) == canonical(w);
  }

  bool in_lattice(const std::vector<Int>& v) const {
    for (const auto& c : canonical(v))
      if (c != 0) return false;
    return true;
  }
};

// Z^rows / column-span(A)
inline FgAbGroup cokernel(const IntMatrix& a) {
  SmithDecomposition s = snf(a);
  FgAbGroup g;
  g.ambient = a.rows();
  g.to_canonical = s.u;
  g.from_canonical = s.u_inv;
  g.moduli.resize(g.ambient);
  for (std::size_t i = 0; i < g.ambient; ++i) g.moduli[i] = s.diag(i);
  return g;
}

inline std::vector<Int> coset_canonical(const FgAbGroup& g, const std::vector<Int>& v) {
  return g.canonical(v);
}

// multiset of invariant factors of the cokernel of A (ambient = rows)
inline std::vector<Int> cokernel_factors(const IntMatrix& a) {
  return cokernel(a).invariant_factors();
}

struct KernelModResult {
  FgAbGroup structure;  // finite; its invariant factors are the group's
  IntMatrix generators; // cols x k, column i of order structure factor i, entries in [0,N)
};

// the subgroup { x in (Z/N)^cols : A x == 0 mod N }
inline KernelModResult kernel_mod(const IntMatrix& a, const Int& n) {
  if (n < 1) throw Error(errc::index_out_of_range, "kernel_mod needs N >= 1");
  const std::size_t c = a.cols();
  SmithDecomposition s = snf(a);

  // solution lattice L = V * diag(t_j) Z^c with t_j = N / gcd(d_j, N);
  // the quotient L / N Z^c is the cokernel of N * B^{-1} = diag(gcd(d_j, N)) * V^{-1}
  std::vector<Int> t(c), piv(c);
  for (std::size_t j = 0; j < c; ++j) {
    Int g = gcd(s.diag(j), n);
    piv[j] = g;
    t[j] = n / g;
  }
  IntMatrix basis = s.v;  // columns scaled by t_j below
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) basis(i, j) *= t[j];
  IntMatrix rel(c, c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) rel(i, j) = piv[i] * s.v_inv(i, j);

  SmithDecomposition q = snf(rel);
  std::vector<Int> factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c; ++i)
    if (q.diag(i) >= 2) {
      factors.push_back(q.diag(i));
      keep.push_back(i);
    }

  KernelModResult out;
  out.structure = FgAbGroup::from_factors(factors);
  out.generators = IntMatrix(c, keep.size());
  // generator for canonical coordinate i: solution vector basis * Uq^{-1} e_i
  for (std::size_t kcol = 0; kcol < keep.size(); ++kcol) {
    std::vector<Int> coeff = q.u_inv.col(keep[kcol]);
    std::vector<Int> vec = basis.apply(coeff);
    for (std::size_t i = 0; i < c; ++i) out.generators(i, kcol) = mod_floor(vec[i], n);
  }
  return out;
}

// invariant factors of G/H inside (Z/N)^c, where G is generated mod N by the
// columns of `gens` and H by the columns of `sub` (H must lie in G)
inline std::vector<Int> quotient_factors_mod(const IntMatrix& gens, const IntMatrix& sub,
                                             const Int& n) {
  const std::size_t c = gens.rows();
  if (sub.rows() != c) throw Error(errc::dimension_mismatch, "subgroup ambient mismatch");
  // lattice L_G = span(gens | N I); row HNF of the transpose gives a basis
  IntMatrix wide(c, gens.cols() + c);
  for (std::size_t j = 0; j < gens.cols(); ++j)
    for (std::size_t i = 0; i < c; ++i) wide(i, j) = gens(i, j);
  for (std::size_t i = 0; i < c; ++i) wide(i, gens.cols() + i) = n;
  HermiteDecomposition h = hnf(wide.transpose());
  // basis rows of h.h (full rank c since N I included)
  IntMatrix basis(c, c);  // columns are basis vectors
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) basis(j, i) = h.h(i, j);

  // express columns of [sub | N I] in the basis; the basis is in echelon
  // order, so at each lead column only the current basis vector is nonzero
  auto solve = [&](std::vector<Int> target) {
    std::vector<Int> coeff(c);
    for (std::size_t i = 0; i < c; ++i) {
      std::size_t lead = 0;
      while (lead < c && basis(lead, i) == 0) ++lead;
      if (lead == c) throw Error(errc::dimension_mismatch, "degenerate lattice basis");
      Int q = target[lead] / basis(lead, i);
      if (target[lead] % basis(lead, i) != 0)
        throw Error(errc::dimension_mismatch, "vector outside lattice");
      coeff[i] = q;
      for (std::size_t k = 0; k < c; ++k) target[k] -= q * basis(k, i);
    }
    for (const auto& x : target)
      if (x != 0) throw Error(errc::dimension_mismatch, "vector outside lattice");
    return coeff;
  };

  IntMatrix rel(c, sub.cols() + c);
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    auto coeff = solve(sub.col(j));
    for (std::size_t i = 0; i < c; ++i) rel(i, j) = coeff[i];
  }
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Int> target(c);
    target[j] = n;
    auto coeff = solve(target);
    for (std::size_t i = 0; i < c; ++i) rel(i, sub.cols() + j) = coeff[i];
  }
  return cokernel_factors(rel);
}

// normalize a multiset of cyclic orders into an invariant-factor chain
inline std::vector<Int> normalize_factors(std::vector<Int> factors) {
  factors.erase(std::remove_if(factors.begin(), factors.end(), [](const Int& f) { return f <= 1; }),
                factors.end());
  return FgAbGroup::from_factors(factors).invariant_factors();
}

}  // namespace dbraid
