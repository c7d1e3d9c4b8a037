#include "dbraid/braid.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace dbraid;
using dbraid::testing::Rng;

namespace {

BraidContext edge_context(Int k1, Int k2, int genus) {
  return make_context(validate_scheme(2, {{1, 2}}, {std::move(k1), std::move(k2)}), genus);
}

BraidWord random_word(Rng& rng, const BraidContext& ctx, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), expd(-3, 3);
  const auto& s = ctx.scheme();
  std::uniform_int_distribution<int> colour(1, s.r);
  BraidWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    Int e = expd(rng);
    if (e == 0) e = 1;
    bool use_a = ctx.surface.loops() > 0 &&
                 (s.edges.empty() || std::uniform_int_distribution<int>(0, 2)(rng) > 0);
    if (use_a) {
      std::uniform_int_distribution<int> loop(1, ctx.surface.loops());
      w.letters.push_back({Letter::A, colour(rng), loop(rng), e});
    } else if (!s.edges.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, s.edges.size() - 1);
      auto [a, b] = s.edges[pick(rng)];
      w.letters.push_back({Letter::B, a, b, e});
    }
  }
  return w;
}

// instances of the defining relations; every one must normalize to the identity
std::vector<BraidWord> relator_words(const BraidContext& ctx) {
  const auto& s = ctx.scheme();
  std::vector<BraidWord> out;
  auto a = [](int colour, int loop, Int e) { return Letter{Letter::A, colour, loop, e}; };
  auto b = [](std::pair<int, int> edge, Int e) {
    return Letter{Letter::B, edge.first, edge.second, e};
  };
  // (i) central generators commute
  for (const auto& e : s.edges)
    for (const auto& f : s.edges)
      out.push_back({{b(e, 1), b(f, 1), b(e, -1), b(f, -1)}});
  // (iv) the degree-weighted product over the edges at each colour collapses
  for (int lambda = 1; lambda <= s.r; ++lambda) {
    BraidWord w;
    for (const auto& e : s.edges)
      if (e.first == lambda || e.second == lambda) {
        int mu = e.first == lambda ? e.second : e.first;
        w.letters.push_back(b(e, s.degrees[mu - 1]));
      }
    out.push_back(std::move(w));
  }
  // (v) central generators commute with every homology generator
  for (const auto& e : s.edges)
    for (int nu = 1; nu <= s.r; ++nu)
      for (int l = 1; l <= ctx.surface.loops(); ++l)
        out.push_back({{b(e, 1), a(nu, l, 1), b(e, -1), a(nu, l, -1)}});
  // (vi) homology commutators produce the pairing power of the edge generator
  for (int lambda = 1; lambda <= s.r; ++lambda)
    for (int mu = lambda + 1; mu <= s.r; ++mu)
      for (int l = 1; l <= ctx.surface.loops(); ++l)
        for (int lp = 1; lp <= ctx.surface.loops(); ++lp) {
          BraidWord w{{a(lambda, l, 1), a(mu, lp, 1), a(lambda, l, -1), a(mu, lp, -1)}};
          int j = ctx.surface.pairing(l, lp);
          if (j != 0 && s.has_edge(lambda, mu)) w.letters.push_back(b({lambda, mu}, -j));
          out.push_back(std::move(w));
        }
  return out;
}

const std::vector<NegativeColourScheme>& small_schemes() {
  static std::vector<NegativeColourScheme> schemes = [] {
    std::vector<NegativeColourScheme> out;
    out.push_back(validate_scheme(2, {{1, 2}}, {Int(2), Int(3)}));
    out.push_back(validate_scheme(3, {{1, 2}, {1, 3}, {2, 3}}, {Int(2), Int(4), Int(6)}));
    out.push_back(validate_scheme(4, {{1, 2}, {2, 3}, {3, 4}}, {Int(2), Int(2), Int(3), Int(5)}));
    out.push_back(validate_scheme(4, {{1, 3}, {2, 4}}, {Int(4), Int(6), Int(2), Int(9)}));
    out.push_back(validate_scheme(1, {}, {Int(5)}));
    return out;
  }();
  return schemes;
}

}  // namespace

TEST_CASE("word parsing") {
  BraidContext ctx = edge_context(2, 3, 1);
  SECTION("basic tokens") {
    BraidWord w = parse_word("a[1,1] a[2,2] a[1,1]^-1 a[2,2]^-1", ctx);
    REQUIRE(w.letters.size() == 4);
    REQUIRE(w.letters[2].exp == -1);
  }
  SECTION("exponents") {
    BraidWord w = parse_word("b[1,2]^3", ctx);
    REQUIRE(w.letters.size() == 1);
    REQUIRE(w.letters[0].exp == 3);
    REQUIRE(parse_word("a[1,1]^0", ctx).letters.empty());
  }
  SECTION("loop index bounds") {
    REQUIRE_THROWS_MATCHES(parse_word("a[1, 0]", ctx), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::index_out_of_range;
                           }));
    REQUIRE_THROWS_MATCHES(parse_word("a[1,3]", ctx), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::index_out_of_range;
                           }));
  }
  SECTION("syntax diagnostics carry a position") {
    REQUIRE_THROWS_WITH(parse_word("a[1 2]", ctx), Catch::Matchers::ContainsSubstring("position"));
    REQUIRE_THROWS_AS(parse_word("c[1,2]", ctx), Error);
  }
  SECTION("b on a non-edge warns and is dropped") {
    BraidContext path = make_context(
        validate_scheme(3, {{1, 2}, {2, 3}}, {Int(2), Int(2), Int(2)}), 1);
    std::vector<std::string> warnings;
    BraidWord w = parse_word("b[1,3] a[1,1]", path, &warnings);
    REQUIRE(w.letters.size() == 1);
    REQUIRE(warnings.size() == 1);
    // reversed colour order is normalized, not an error
    REQUIRE(parse_word("b[2,1]", path).letters[0].i == 1);
  }
}

TEST_CASE("normal forms of the worked examples") {
  SECTION("the basic homology commutator is the edge generator") {
    BraidContext ctx = edge_context(2, 4, 1);
    NormalForm nf = normal_form(ctx, parse_word("a[1,1] a[2,2] a[1,1]^-1 a[2,2]^-1", ctx));
    REQUIRE(is_central(nf));
    REQUIRE(nf.central == std::vector<Int>{1});  // pairing(1,2) = +1
  }
  SECTION("empty word") {
    BraidContext ctx = edge_context(2, 4, 1);
    REQUIRE(nf_equal(normal_form(ctx, BraidWord{}), nf_identity(ctx)));
  }
  SECTION("coprime degrees have trivial centre") {
    BraidContext ctx = edge_context(2, 3, 1);
    NormalForm nf = normal_form(ctx, parse_word("b[1,2]", ctx));
    REQUIRE(nf_equal(nf, nf_identity(ctx)));
  }
  SECTION("words cancel against their formal inverses") {
    Rng rng(8080);
    for (const auto& s : small_schemes())
      for (int g = 0; g <= 2; ++g) {
        BraidContext ctx = make_context(s, g);
        for (int trial = 0; trial < 30; ++trial) {
          BraidWord w = random_word(rng, ctx, 12);
          REQUIRE(nf_equal(normal_form(ctx, concat(w, inverse_word(w))), nf_identity(ctx)));
        }
      }
  }
}

TEST_CASE("every defining relation normalizes to the identity") {
  for (const auto& s : small_schemes())
    for (int g = 0; g <= 2; ++g) {
      BraidContext ctx = make_context(s, g);
      for (const BraidWord& rel : relator_words(ctx))
        REQUIRE(nf_equal(normal_form(ctx, rel), nf_identity(ctx)));
    }
}

TEST_CASE("pairing matrix convention") {
  SurfaceContext surface{2};
  REQUIRE(surface.pairing(1, 3) == 1);
  REQUIRE(surface.pairing(3, 1) == -1);
  REQUIRE(surface.pairing(2, 4) == 1);
  REQUIRE(surface.pairing(3, 2) == 0);
  for (int l = 1; l <= 4; ++l)
    for (int lp = 1; lp <= 4; ++lp) REQUIRE(surface.pairing(l, lp) == -surface.pairing(lp, l));
}

TEST_CASE("normal form multiplication") {
  BraidContext ctx = edge_context(2, 4, 2);
  Rng rng(515151);
  SECTION("identity is neutral") {
    for (int trial = 0; trial < 20; ++trial) {
      NormalForm x = normal_form(ctx, random_word(rng, ctx, 10));
      REQUIRE(nf_equal(multiply(ctx, x, nf_identity(ctx)), x));
      REQUIRE(nf_equal(multiply(ctx, nf_identity(ctx), x), x));
    }
  }
  SECTION("concatenation is multiplication") {
    for (int trial = 0; trial < 60; ++trial) {
      BraidWord u = random_word(rng, ctx, 10), v = random_word(rng, ctx, 10);
      REQUIRE(nf_equal(normal_form(ctx, concat(u, v)),
                       multiply(ctx, normal_form(ctx, u), normal_form(ctx, v))));
    }
  }
  SECTION("swapping the factors costs the pairing commutator") {
    NormalForm x = normal_form(ctx, parse_word("a[1,1]", ctx));
    NormalForm y = normal_form(ctx, parse_word("a[2,3]", ctx));
    NormalForm xy = multiply(ctx, x, y), yx = multiply(ctx, y, x);
    NormalForm correction = normal_form(ctx, parse_word("b[1,2]", ctx));  // pairing(1,3) = 1
    REQUIRE(nf_equal(xy, multiply(ctx, correction, yx)));
  }
  SECTION("associativity") {
    for (const auto& s : small_schemes()) {
      BraidContext c = make_context(s, 2);
      for (int trial = 0; trial < 170; ++trial) {
        NormalForm x = normal_form(c, random_word(rng, c, 8));
        NormalForm y = normal_form(c, random_word(rng, c, 8));
        NormalForm z = normal_form(c, random_word(rng, c, 8));
        REQUIRE(nf_equal(multiply(c, multiply(c, x, y), z), multiply(c, x, multiply(c, y, z))));
      }
    }
  }
  SECTION("central elements commute with everything") {
    for (int trial = 0; trial < 40; ++trial) {
      NormalForm x = normal_form(ctx, random_word(rng, ctx, 10));
      NormalForm beta = normal_form(ctx, parse_word("b[1,2]", ctx));
      REQUIRE(nf_equal(multiply(ctx, x, beta), multiply(ctx, beta, x)));
    }
  }
}

TEST_CASE("the collection correction is a 2-cocycle") {
  BraidContext ctx = make_context(
      validate_scheme(3, {{1, 2}, {1, 3}, {2, 3}}, {Int(2), Int(4), Int(6)}), 2);
  Rng rng(171717);
  std::uniform_int_distribution<int> entry(-4, 4);
  auto random_exponents = [&] {
    IntMatrix m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
    return m;
  };
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m1 = random_exponents(), m2 = random_exponents(), m3 = random_exponents();
    std::vector<Int> lhs = cocycle(ctx, m1, m2);
    std::vector<Int> l2 = cocycle(ctx, m1 + m2, m3);
    std::vector<Int> rhs = cocycle(ctx, m2, m3);
    std::vector<Int> r2 = cocycle(ctx, m1, m2 + m3);
    for (std::size_t e = 0; e < lhs.size(); ++e) REQUIRE(lhs[e] + l2[e] == rhs[e] + r2[e]);
  }
}

TEST_CASE("normal form inversion") {
  Rng rng(626262);
  for (const auto& s : small_schemes()) {
    BraidContext ctx = make_context(s, 2);
    for (int trial = 0; trial < 40; ++trial) {
      BraidWord w = random_word(rng, ctx, 10);
      NormalForm x = normal_form(ctx, w);
      REQUIRE(nf_equal(multiply(ctx, x, invert(ctx, x)), nf_identity(ctx)));
      REQUIRE(nf_equal(multiply(ctx, invert(ctx, x), x), nf_identity(ctx)));
      REQUIRE(nf_equal(invert(ctx, invert(ctx, x)), x));
      // letter-by-letter inversion oracle
      REQUIRE(nf_equal(invert(ctx, x), normal_form(ctx, inverse_word(w))));
    }
  }
}

TEST_CASE("word problem under relation rewriting") {
  Rng rng(98765);
  for (const auto& s : small_schemes()) {
    BraidContext ctx = make_context(s, 2);
    std::vector<BraidWord> relators = relator_words(ctx);
    std::uniform_int_distribution<std::size_t> rpick(0, relators.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      BraidWord w = random_word(rng, ctx, 10);
      BraidWord mutated = w;
      for (int step = 0; step < 20; ++step) {
        const BraidWord& rel = relators[rpick(rng)];
        BraidWord ins = std::uniform_int_distribution<int>(0, 1)(rng) ? rel : inverse_word(rel);
        std::uniform_int_distribution<std::size_t> pos(0, mutated.letters.size());
        std::size_t at = pos(rng);
        mutated.letters.insert(mutated.letters.begin() + at, ins.letters.begin(),
                               ins.letters.end());
      }
      REQUIRE(words_equal(ctx, w, mutated));
    }
    // a genuine difference is detected
    BraidWord u = parse_word(ctx.surface.loops() ? "a[1,1]" : "", ctx);
    BraidWord v = parse_word(ctx.surface.loops() && s.r >= 2 ? "a[2,1]" : "", ctx);
    if (s.r >= 2) REQUIRE_FALSE(words_equal(ctx, u, v));
  }
}

TEST_CASE("hurewicz map") {
  BraidContext ctx = edge_context(2, 4, 1);
  SECTION("central words vanish") {
    REQUIRE(hurewicz(normal_form(ctx, parse_word("b[1,2]", ctx))).is_zero());
  }
  SECTION("exponent sums are recorded") {
    NormalForm x = normal_form(ctx, parse_word("a[1,1]^3", ctx));
    REQUIRE(x.homology(0, 0) == 3);
    REQUIRE_FALSE(is_central(x));
  }
  SECTION("homomorphism") {
    Rng rng(13579);
    for (int trial = 0; trial < 40; ++trial) {
      NormalForm x = normal_form(ctx, random_word(rng, ctx, 10));
      NormalForm y = normal_form(ctx, random_word(rng, ctx, 10));
      REQUIRE(hurewicz(multiply(ctx, x, y)) == x.homology + y.homology);
    }
  }
}

TEST_CASE("allowable collections and theta") {
  auto s = validate_scheme(2, {{1, 2}}, {Int(2), Int(4)});
  BraidContext ctx = make_context(s, 1);
  SECTION("the worked Z_2 collection is allowable") {
    AllowableCollection y = zero_collection(FgAbGroup::from_factors({Int(2)}), 2);
    y.Y[0][1] = {Int(1)};
    y.Y[1][0] = {Int(1)};
    REQUIRE(check_allowable(y, s).allowable);
    NormalForm beta = normal_form(ctx, parse_word("b[1,2]", ctx));
    REQUIRE(theta(ctx, y, beta) == std::vector<Int>{1});
    REQUIRE(theta(ctx, y, nf_identity(ctx)) == std::vector<Int>{0});
  }
  SECTION("nonzero values on non-edges violate (A2)") {
    auto path = validate_scheme(3, {{1, 2}, {2, 3}}, {Int(2), Int(2), Int(2)});
    AllowableCollection y = zero_collection(FgAbGroup::from_factors({Int(2)}), 3);
    y.Y[0][2] = {Int(1)};
    AllowabilityReport rep = check_allowable(y, path);
    REQUIRE_FALSE(rep.allowable);
    REQUIRE_THAT(rep.violations[0], Catch::Matchers::ContainsSubstring("(A2)"));
  }
  SECTION("the zero collection is allowable") {
    REQUIRE(check_allowable(zero_collection(FgAbGroup::from_factors({Int(4)}), 2), s).allowable);
  }
  SECTION("theta refuses non-central input") {
    AllowableCollection y = zero_collection(FgAbGroup::from_factors({Int(2)}), 2);
    y.Y[0][1] = y.Y[1][0] = {Int(1)};
    REQUIRE_THROWS_MATCHES(theta(ctx, y, normal_form(ctx, parse_word("a[1,1]", ctx))), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return e.code() == errc::not_central; }));
  }
  SECTION("the universal collection splits the projection") {
    Rng rng(24680);
    for (const auto& scheme : small_schemes()) {
      BraidContext c = make_context(scheme, 1);
      AllowableCollection y = universal_collection(c.pres);
      REQUIRE(check_allowable(y, scheme).allowable);
      for (int trial = 0; trial < 20; ++trial) {
        // random central element, as a product of edge generators
        BraidWord w;
        std::uniform_int_distribution<int> expd(-4, 4);
        for (const auto& e : scheme.edges)
          w.letters.push_back({Letter::B, e.first, e.second, Int(expd(rng))});
        NormalForm x = normal_form(c, w);
        REQUIRE(theta(c, y, x) == x.central);
      }
    }
  }
  SECTION("theta is additive on central elements") {
    Rng rng(1123);
    AllowableCollection y = universal_collection(ctx.pres);
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<int> expd(-4, 4);
      NormalForm a = normal_form(ctx, BraidWord{{{Letter::B, 1, 2, Int(expd(rng))}}});
      NormalForm b = normal_form(ctx, BraidWord{{{Letter::B, 1, 2, Int(expd(rng))}}});
      std::vector<Int> sum = theta(ctx, y, a);
      std::vector<Int> tb = theta(ctx, y, b);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += tb[i];
      REQUIRE(y.K.canonical(sum) == y.K.canonical(theta(ctx, y, multiply(ctx, a, b))));
    }
  }
}

TEST_CASE("two-colour link invariant") {
  SECTION("counts the edge generator mod gcd") {
    BraidContext ctx = edge_context(6, 4, 1);
    for (int n = -5; n <= 5; ++n) {
      BraidWord w{{{Letter::B, 1, 2, Int(n)}}};
      TwoColourLink link = two_colour_link_invariant(ctx, w);
      REQUIRE(link.modulus == 2);
      REQUIRE(link.residue == mod_floor(Int(n), Int(2)));
    }
  }
  SECTION("trivial braid links zero") {
    BraidContext ctx = edge_context(6, 4, 1);
    REQUIRE(two_colour_link_invariant(ctx, BraidWord{}).residue == 0);
  }
  SECTION("the homology commutator links once") {
    for (int g = 1; g <= 3; ++g) {
      BraidContext ctx = edge_context(6, 4, g);
      BraidWord w = parse_word("a[1,1] a[2," + std::to_string(g + 1) + "] a[1,1]^-1 a[2," +
                                   std::to_string(g + 1) + "]^-1",
                               ctx);
      REQUIRE(two_colour_link_invariant(ctx, w).residue == 1);
    }
  }
  SECTION("rejects other schemes and non-central words") {
    BraidContext wrong = make_context(validate_scheme(3, {{1, 2}}, {Int(2), Int(2), Int(2)}), 1);
    REQUIRE_THROWS_MATCHES(two_colour_link_invariant(wrong, BraidWord{}), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return e.code() == errc::wrong_scheme; }));
    BraidContext ctx = edge_context(6, 4, 1);
    REQUIRE_THROWS_MATCHES(two_colour_link_invariant(ctx, parse_word("a[1,1]", ctx)), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return e.code() == errc::not_central; }));
  }
}

TEST_CASE("normal forms from another context are rejected") {
  BraidContext ctx24 = edge_context(2, 4, 1);
  BraidContext ctx23g2 = edge_context(2, 3, 2);
  NormalForm foreign = normal_form(ctx23g2, parse_word("a[1,3]", ctx23g2));
  REQUIRE_THROWS_MATCHES(multiply(ctx24, nf_identity(ctx24), foreign), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::context_mismatch; }));
  REQUIRE_THROWS_AS(invert(ctx24, foreign), Error);
}

TEST_CASE("genus zero degenerates to the centre") {
  BraidContext ctx = edge_context(2, 4, 0);
  REQUIRE(ctx.surface.loops() == 0);
  REQUIRE_THROWS_AS(parse_word("a[1,1]", ctx), Error);
  NormalForm nf = normal_form(ctx, parse_word("b[1,2]^3", ctx));
  REQUIRE(nf.homology.cols() == 0);
  REQUIRE(is_central(nf));
  REQUIRE(nf.central == std::vector<Int>{1});  // 3 mod 2
}
