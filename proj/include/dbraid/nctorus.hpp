#pragma once

// Rational noncommutative-torus parameters attached to characters of the
// centre, and a numerical verification of the group-algebra projector
// identities.

#include "dbraid/braid.hpp"
#include "dbraid/centre.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace dbraid {

struct NCTorusParams {
  int colours = 0;
  int genus = 0;
  TorusCharacter character;
  std::vector<std::vector<Rat>> theta;  // (2g*r)^2 entries in [0,1)

  std::size_t index(int lambda, int l) const {
    return static_cast<std::size_t>(lambda - 1) * (2 * genus) + (l - 1);
  }
};

// ϑ^{λ,ℓ}_{λ',ℓ'}(χ) = χ(J[ℓ,ℓ'] · b_{λ,λ'}) on edges, zero on the same colour
// and on non-edges
inline NCTorusParams nc_parameters(const CentrePresentation& pres, int genus,
                                   const TorusCharacter& chi) {
  if (!chi.matches(pres.group))
    throw Error(errc::context_mismatch, "character does not belong to this centre");
  SurfaceContext surface{genus};
  const NegativeColourScheme& s = pres.scheme;
  NCTorusParams out;
  out.colours = s.r;
  out.genus = genus;
  out.character = chi;
  const std::size_t dim = static_cast<std::size_t>(s.r) * surface.loops();
  out.theta.assign(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t e = 0; e < pres.edge_index.size(); ++e) {
    auto [lo, hi] = pres.edge_index[e];
    std::vector<Int> gen(pres.edge_count());
    for (int l = 1; l <= surface.loops(); ++l)
      for (int lp = 1; lp <= surface.loops(); ++lp) {
        int j = surface.pairing(l, lp);
        if (j == 0) continue;
        gen[e] = j;
        Rat value = character_value(pres.group, chi, gen);
        out.theta[out.index(lo, l)][out.index(hi, lp)] = value;
        out.theta[out.index(hi, l)][out.index(lo, lp)] = value;
      }
    gen[e] = 0;
  }
  return out;
}

struct ProjectorReport {
  int k = 0;
  double max_error = 0.0;
  bool pass(double tolerance) const { return max_error <= tolerance; }
};

// group algebra of Z_k with ζ a primitive k-th root of unity:
// β_j = (1/k) Σ_i ζ̄^{ij} β^i are orthogonal idempotents summing to e
inline ProjectorReport verify_projectors(int k) {
  if (k < 1) throw Error(errc::index_out_of_range, "projector check needs k >= 1");
  using Cx = std::complex<double>;
  const double tau = 6.283185307179586476925286766559;
  std::vector<std::vector<Cx>> proj(k, std::vector<Cx>(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      proj[j][i] = std::polar(1.0 / k, -tau * i * j / k);  // coefficient of β^i

  auto convolve = [&](const std::vector<Cx>& a, const std::vector<Cx>& b) {
    std::vector<Cx> c(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c[(i + j) % k] += a[i] * b[j];
    return c;
  };

  ProjectorReport rep;
  rep.k = k;
  auto record = [&](const std::vector<Cx>& got, const std::vector<Cx>& want) {
    for (int i = 0; i < k; ++i) rep.max_error = std::max(rep.max_error, std::abs(got[i] - want[i]));
  };
  std::vector<Cx> unit(k);
  unit[0] = 1.0;
  std::vector<Cx> total(k);
  for (int j = 0; j < k; ++j) {
    record(convolve(proj[j], proj[j]), proj[j]);  // idempotent
    for (int jp = j + 1; jp < k; ++jp)
      record(convolve(proj[j], proj[jp]), std::vector<Cx>(k));  // orthogonal
    for (int i = 0; i < k; ++i) total[i] += proj[j][i];
  }
  record(total, unit);  // partition of unity
  return rep;
}

}  // namespace dbraid
