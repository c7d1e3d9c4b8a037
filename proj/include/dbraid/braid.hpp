#pragma once

// Divisor braid words and their collection normal form: homology exponent
// matrix plus a canonical central coset, multiplication through the symplectic
// 2-cocycle, the word problem, and Γ-linking invariants θ_Y.

#include "dbraid/centre.hpp"
#include "dbraid/scheme.hpp"
#include "dbraid/zlinalg.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dbraid {

// genus and the intersection pairing of the fixed homology basis,
// J = [[0, I], [-I, 0]]
struct SurfaceContext {
  int genus = 0;

  int loops() const { return 2 * genus; }

  // 1-based; ♯(a_l, a_lp)
  int pairing(int l, int lp) const {
    if (l <= genus && lp == l + genus) return 1;
    if (l > genus && lp == l - genus) return -1;
    return 0;
  }
};

struct BraidContext {
  SurfaceContext surface;
  CentrePresentation pres;

  const NegativeColourScheme& scheme() const { return pres.scheme; }
  bool operator==(const BraidContext& o) const {
    return surface.genus == o.surface.genus && pres.scheme == o.pres.scheme;
  }
};

inline BraidContext make_context(const NegativeColourScheme& s, int genus,
                                 std::vector<std::string>* warnings = nullptr) {
  if (genus < 0) throw Error(errc::index_out_of_range, "genus must be >= 0");
  if (warnings && !s.very_composite())
    warnings->push_back("scheme is not very composite (some k < 2); braid-group "
                        "interpretation of the presentation is outside the proven range");
  return BraidContext{SurfaceContext{genus}, centre_presentation(s)};
}

struct Letter {
  enum Kind { A, B } kind;
  int i = 0, j = 0;  // A: colour i, loop j.  B: edge {i,j} with i < j
  Int exp = 1;
};

struct BraidWord {
  std::vector<Letter> letters;
};

// grammar: tokens a[λ,ℓ] and b[λ,μ], optional ^<int>, whitespace separated
inline BraidWord parse_word(std::string_view text, const BraidContext& ctx,
                            std::vector<std::string>* warnings = nullptr) {
  const NegativeColourScheme& s = ctx.scheme();
  BraidWord word;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(errc::syntax_error, "parse error at position " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return Int(std::string(text.substr(start, pos - start)));
  };

  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    char gen = text[pos];
    if (gen != 'a' && gen != 'b') fail("expected generator 'a' or 'b'");
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    skip_ws();
    Int first = read_int(false);
    skip_ws();
    if (pos >= text.size() || text[pos] != ',') fail("expected ','");
    ++pos;
    skip_ws();
    Int second = read_int(false);
    skip_ws();
    if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
    ++pos;
    Int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = read_int(true);
    }
    if (first < 1 || first > s.r)
      throw Error(errc::index_out_of_range, "colour " + first.str() + " not in 1.." +
                                                std::to_string(s.r));
    int i = first.convert_to<int>();
    if (gen == 'a') {
      if (second < 1 || second > ctx.surface.loops())
        throw Error(errc::index_out_of_range, "loop index " + second.str() + " not in 1.." +
                                                  std::to_string(ctx.surface.loops()));
      if (exp != 0) word.letters.push_back({Letter::A, i, second.convert_to<int>(), exp});
    } else {
      if (second < 1 || second > s.r)
        throw Error(errc::index_out_of_range, "colour " + second.str() + " not in 1.." +
                                                  std::to_string(s.r));
      int j = second.convert_to<int>();
      if (i == j) throw Error(errc::index_out_of_range, "b[" + std::to_string(i) + "," +
                                                            std::to_string(j) + "] is a self-pair");
      if (i > j) std::swap(i, j);
      if (!s.has_edge(i, j)) {
        if (warnings)
          warnings->push_back("b[" + std::to_string(i) + "," + std::to_string(j) +
                              "] names a non-edge; the generator is trivial and was dropped");
        continue;
      }
      if (exp != 0) word.letters.push_back({Letter::B, i, j, exp});
    }
  }
  return word;
}

inline BraidWord inverse_word(const BraidWord& w) {
  BraidWord inv;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Letter l = *it;
    l.exp = -l.exp;
    inv.letters.push_back(l);
  }
  return inv;
}

inline BraidWord concat(const BraidWord& u, const BraidWord& v) {
  BraidWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

struct NormalForm {
  IntMatrix homology;        // r x 2g exponent sums of the a-generators
  std::vector<Int> central;  // canonical coset representative over edge_index
};

inline NormalForm nf_identity(const BraidContext& ctx) {
  return NormalForm{IntMatrix(static_cast<std::size_t>(ctx.scheme().r),
                              static_cast<std::size_t>(ctx.surface.loops())),
                    std::vector<Int>(ctx.pres.edge_count())};
}

inline void canonicalize(const BraidContext& ctx, NormalForm& nf) {
  nf.central = ctx.pres.group.canonical_rep(nf.central);
}

// cocycle of the collection order (colour, loop) ascending: for each edge
// {p<q}, a right factor's a_{p,l2} moving left past a_{q,l1} contributes
// J[l1,l2] * M1[q,l1] * M2[p,l2] to the edge coordinate
inline std::vector<Int> cocycle(const BraidContext& ctx, const IntMatrix& m1, const IntMatrix& m2) {
  std::vector<Int> c(ctx.pres.edge_count());
  const int loops = ctx.surface.loops();
  for (std::size_t e = 0; e < ctx.pres.edge_count(); ++e) {
    auto [p, q] = ctx.pres.edge_index[e];
    for (int l1 = 1; l1 <= loops; ++l1) {
      if (m1(q - 1, l1 - 1) == 0) continue;
      for (int l2 = 1; l2 <= loops; ++l2) {
        int j = ctx.surface.pairing(l1, l2);
        if (j != 0) c[e] += Int(j) * m1(q - 1, l1 - 1) * m2(p - 1, l2 - 1);
      }
    }
  }
  return c;
}

inline NormalForm normal_form(const BraidContext& ctx, const BraidWord& w) {
  NormalForm nf = nf_identity(ctx);
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (l.kind == Letter::B) {
      if (!ctx.scheme().has_edge(l.i, l.j)) continue;  // trivial generator
      nf.central[ctx.scheme().edge_pos(l.i, l.j)] += l.exp;
    } else {
      // move a_{λ,ℓ}^e left past every collected letter of strictly larger
      // (colour, loop) order; only edge pairs pick up central charge
      for (int q = l.i + 1; q <= ctx.scheme().r; ++q) {
        if (!ctx.scheme().has_edge(l.i, q)) continue;
        std::size_t e = ctx.scheme().edge_pos(l.i, q);
        for (int l1 = 1; l1 <= ctx.surface.loops(); ++l1) {
          int j = ctx.surface.pairing(l1, l.j);
          if (j != 0) nf.central[e] += Int(j) * nf.homology(q - 1, l1 - 1) * l.exp;
        }
      }
      nf.homology(l.i - 1, l.j - 1) += l.exp;
    }
  }
  canonicalize(ctx, nf);
  return nf;
}

inline void require_same_context(const BraidContext& ctx, const NormalForm& x) {
  if (x.central.size() != ctx.pres.edge_count() ||
      x.homology.rows() != static_cast<std::size_t>(ctx.scheme().r) ||
      x.homology.cols() != static_cast<std::size_t>(ctx.surface.loops()))
    throw Error(errc::context_mismatch, "normal form belongs to a different scheme or genus");
}

inline NormalForm multiply(const BraidContext& ctx, const NormalForm& x, const NormalForm& y) {
  require_same_context(ctx, x);
  require_same_context(ctx, y);
  NormalForm z;
  z.homology = x.homology + y.homology;
  std::vector<Int> c = cocycle(ctx, x.homology, y.homology);
  z.central.resize(ctx.pres.edge_count());
  for (std::size_t e = 0; e < z.central.size(); ++e)
    z.central[e] = x.central[e] + y.central[e] + c[e];
  canonicalize(ctx, z);
  return z;
}

inline NormalForm invert(const BraidContext& ctx, const NormalForm& x) {
  require_same_context(ctx, x);
  NormalForm z;
  z.homology = x.homology;
  for (std::size_t i = 0; i < z.homology.rows(); ++i) z.homology.negate_row(i);
  std::vector<Int> c = cocycle(ctx, x.homology, x.homology);
  z.central.resize(ctx.pres.edge_count());
  for (std::size_t e = 0; e < z.central.size(); ++e) z.central[e] = c[e] - x.central[e];
  canonicalize(ctx, z);
  return z;
}

inline bool nf_equal(const NormalForm& x, const NormalForm& y) {
  return x.homology == y.homology && x.central == y.central;
}

inline bool words_equal(const BraidContext& ctx, const BraidWord& u, const BraidWord& v) {
  return nf_equal(normal_form(ctx, u), normal_form(ctx, v));
}

// h: the r-tuple of 1-homology classes; kernel of h is the centre
inline const IntMatrix& hurewicz(const NormalForm& x) { return x.homology; }

inline bool is_central(const NormalForm& x) { return x.homology.is_zero(); }

// values Y_{λμ} in an abelian group K; (A1) degree-weighted sums vanish,
// (A2) zero on non-edges
struct AllowableCollection {
  FgAbGroup K;
  std::vector<std::vector<std::vector<Int>>> Y;  // [λ-1][μ-1] -> ambient vector of K

  const std::vector<Int>& at(int lambda, int mu) const { return Y[lambda - 1][mu - 1]; }
};

inline AllowableCollection zero_collection(const FgAbGroup& k, int r) {
  AllowableCollection c{k, {}};
  c.Y.assign(r, std::vector<std::vector<Int>>(r, std::vector<Int>(k.ambient)));
  return c;
}

// the universal collection Y_{λμ} = [b_{λμ}] in K = D_k(Γ)
inline AllowableCollection universal_collection(const CentrePresentation& pres) {
  AllowableCollection c = zero_collection(pres.group, pres.scheme.r);
  for (std::size_t e = 0; e < pres.edge_index.size(); ++e) {
    auto [lo, hi] = pres.edge_index[e];
    std::vector<Int> gen(pres.edge_count());
    gen[e] = 1;
    c.Y[lo - 1][hi - 1] = gen;
    c.Y[hi - 1][lo - 1] = gen;
  }
  return c;
}

struct AllowabilityReport {
  bool allowable = true;
  std::vector<std::string> violations;
};

inline AllowabilityReport check_allowable(const AllowableCollection& y,
                                          const NegativeColourScheme& s) {
  AllowabilityReport rep;
  if (y.Y.size() != static_cast<std::size_t>(s.r))
    throw Error(errc::dimension_mismatch, "collection is not indexed over all ordered colour pairs");
  for (const auto& row : y.Y)
    if (row.size() != static_cast<std::size_t>(s.r))
      throw Error(errc::dimension_mismatch, "collection is not indexed over all ordered colour pairs");
  auto violation = [&](std::string msg) {
    rep.allowable = false;
    rep.violations.push_back(std::move(msg));
  };
  for (int lambda = 1; lambda <= s.r; ++lambda)
    for (int mu = 1; mu <= s.r; ++mu) {
      if (y.at(lambda, mu).size() != y.K.ambient)
        throw Error(errc::dimension_mismatch, "collection value has wrong ambient length");
      if (!s.has_edge(lambda, mu) && !y.K.in_lattice(y.at(lambda, mu)))
        violation("(A2) fails: Y[" + std::to_string(lambda) + "," + std::to_string(mu) +
                  "] nonzero on a non-edge");
    }
  for (int mu = 1; mu <= s.r; ++mu) {
    std::vector<Int> sum(y.K.ambient);
    for (int lambda = 1; lambda <= s.r; ++lambda)
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += s.degrees[lambda - 1] * y.at(lambda, mu)[i];
    if (!y.K.in_lattice(sum))
      violation("(A1) fails: sum_λ k_λ Y[λ," + std::to_string(mu) + "] != 0");
  }
  for (int lambda = 1; lambda <= s.r; ++lambda) {
    std::vector<Int> sum(y.K.ambient);
    for (int mu = 1; mu <= s.r; ++mu)
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += s.degrees[mu - 1] * y.at(lambda, mu)[i];
    if (!y.K.in_lattice(sum))
      violation("(A1) fails: sum_μ k_μ Y[" + std::to_string(lambda) + ",μ] != 0");
  }
  return rep;
}

// θ_Y on a central element, determined by β_{λμ} -> Y_{λμ}; returns the
// canonical representative in K
inline std::vector<Int> theta(const BraidContext& ctx, const AllowableCollection& y,
                              const NormalForm& x) {
  require_same_context(ctx, x);
  if (!is_central(x)) throw Error(errc::not_central, "theta is defined on central elements only");
  AllowabilityReport rep = check_allowable(y, ctx.scheme());
  if (!rep.allowable)
    throw Error(errc::not_allowable, "collection violates allowability: " + rep.violations[0]);
  auto eval = [&](const std::vector<Int>& coeffs) {
    std::vector<Int> out(y.K.ambient);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      if (coeffs[e] == 0) continue;
      auto [lo, hi] = ctx.pres.edge_index[e];
      const std::vector<Int>& val = y.at(lo, hi);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[e] * val[i];
    }
    return out;
  };
  // allowability kills the relation lattice; assert it on every column
  for (std::size_t mu = 0; mu < ctx.pres.relations.cols(); ++mu)
    if (!y.K.in_lattice(eval(ctx.pres.relations.col(mu))))
      throw Error(errc::not_allowable, "collection does not annihilate relation column " +
                                           std::to_string(mu + 1));
  return y.K.canonical_rep(eval(x.central));
}

struct TwoColourLink {
  Int residue;  // in [0, modulus), empty class when modulus == 1
  Int modulus;  // gcd(k_1, k_2)
};

// L(n β_{1,2}) ≡ n mod gcd(k1,k2) on the two-colour edge scheme
inline TwoColourLink two_colour_link_invariant(const BraidContext& ctx, const BraidWord& w) {
  const NegativeColourScheme& s = ctx.scheme();
  if (s.r != 2 || s.edges != std::vector<std::pair<int, int>>{{1, 2}})
    throw Error(errc::wrong_scheme, "two-colour linking needs the single-edge scheme on 2 colours");
  NormalForm nf = normal_form(ctx, w);
  if (!is_central(nf))
    throw Error(errc::not_central, "two-colour linking is defined on central braids only");
  Int modulus = gcd(s.degrees[0], s.degrees[1]);
  return TwoColourLink{modulus == 1 ? Int(0) : mod_floor(nf.central[0], modulus), modulus};
}

}  // namespace dbraid
