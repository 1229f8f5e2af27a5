#include "cantor/cubeset.hpp"

#include <random>

#include "doctest.h"

using namespace cantor;

namespace {

Rational rat(long p, long q) { return Rational(p, q); }

CubeSet random_set(std::mt19937_64& rng, unsigned resolution, double fill = 0.5) {
  CubeSet s(resolution);
  std::bernoulli_distribution bit(fill);
  for (std::uint64_t a = 0; a < s.atom_count(); ++a)
    if (bit(rng)) s.set(a);
  return s;
}

// Brute-force psi: minimum of lambda(A ^ U) over every union U of level-n
// cylinders, by enumerating all 2^(2^n) of them.  Oracle only; n <= 3.
Dyadic psi_brute(const CubeSet& a, unsigned n) {
  const std::uint64_t cyls = std::uint64_t(1) << n;
  Dyadic best = Dyadic(Int(1), 0);
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << cyls); ++pick) {
    CubeSet u(a.resolution());
    for (std::uint64_t c = 0; c < cyls; ++c)
      if ((pick >> c) & 1) u = u | CubeSet::cylinder(SignSeq::of_atom(c, n), a.resolution());
    Dyadic dist = (a ^ u).lambda();
    if (dist < best) best = dist;
  }
  return best;
}

CubeSet flip_naive(const CubeSet& a, unsigned lo, unsigned hi) {
  const std::uint64_t xm =
      ((std::uint64_t(1) << hi) - 1) ^ ((std::uint64_t(1) << lo) - 1);
  CubeSet out(a.resolution());
  a.for_each_atom([&](std::uint64_t atom) { out.set(atom ^ xm); });
  return out;
}

}  // namespace

TEST_CASE("cylinder basics") {
  auto c1 = CubeSet::cylinder(SignSeq::parse("+"), 1);
  CHECK(c1.encode() == "1:2");
  CHECK(c1.lambda().to_rational() == rat(1, 2));

  auto full = CubeSet::cylinder(SignSeq::parse(""), 3);
  CHECK(full.is_full());
  CHECK(full.lambda().to_rational() == 1);

  auto c4 = CubeSet::cylinder(SignSeq::parse("--++"), 4);
  CHECK(c4.lambda().to_rational() == rat(1, 16));

  CHECK_THROWS_AS(CubeSet::cylinder(SignSeq::parse("+++"), 2), ResolutionError);
}

TEST_CASE("set operations") {
  std::mt19937_64 rng(7);
  auto a = random_set(rng, 6);
  CHECK((a | a.complement()).is_full());
  CHECK((a ^ a).is_empty());
  auto plus = CubeSet::cylinder(SignSeq::parse("+"), 1);
  auto minus = CubeSet::cylinder(SignSeq::parse("-"), 1);
  CHECK((plus & minus).is_empty());

  // lambda(A|B) + lambda(A&B) == lambda(A) + lambda(B)
  auto b = random_set(rng, 6);
  CHECK((a | b).lambda() + (a & b).lambda() == a.lambda() + b.lambda());

  // auto-refinement across resolutions
  auto deep = random_set(rng, 8);
  CHECK((plus & deep).resolution() == 8);
  CHECK((plus & deep).subset_of(plus));
}

TEST_CASE("resolution invariance of lambda, phi, psi") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto a = random_set(rng, 7);
    auto b = a.refined(11);
    CHECK(a.lambda() == b.lambda());
    for (unsigned r = 1; r <= 11; ++r) CHECK(a.phi(r) == b.phi(r));
    for (unsigned n = 1; n <= 7; ++n) CHECK(a.psi(n) == b.psi(n));
  }
}

TEST_CASE("phi: definition cases and additivity") {
  auto plus = CubeSet::cylinder(SignSeq::parse("+"), 1);
  CHECK(plus.phi(1).to_rational() == rat(1, 2));
  CHECK(plus.refined(4).phi(2).is_zero());
  CHECK(CubeSet::full(5).phi(3).is_zero());

  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    auto a = random_set(rng, 8);
    auto b = random_set(rng, 8) - a;  // disjoint from a
    for (unsigned r = 1; r <= 10; ++r) {
      CHECK((a | b).phi(r) == a.phi(r) + b.phi(r));
      CHECK(a.phi(r).abs() <= a.lambda());
    }
  }
}

TEST_CASE("orthonormality of the coordinate signs") {
  const unsigned n = 6;
  auto full = CubeSet::full(n);
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned q = 1; q <= n; ++q) {
      std::int64_t dot = 0;
      full.for_each_atom([&](std::uint64_t a) {
        int sr = ((a >> (r - 1)) & 1) ? 1 : -1;
        int sq = ((a >> (q - 1)) & 1) ? 1 : -1;
        dot += sr * sq;
      });
      CHECK(dot == (r == q ? std::int64_t(1) << n : 0));
    }
  }
}

TEST_CASE("flip matches the naive image and is an involution") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    unsigned n = 4 + static_cast<unsigned>(rng() % 6);  // 4..9
    auto a = random_set(rng, n);
    unsigned lo = static_cast<unsigned>(rng() % n);
    unsigned hi = lo + 1 + static_cast<unsigned>(rng() % (n - lo));
    auto f = a.flip(lo, hi);
    CHECK(f == flip_naive(a, lo, hi));
    CHECK(f.flip(lo, hi) == a);
    CHECK(f.lambda() == a.lambda());
  }

  CHECK(CubeSet::cylinder(SignSeq::parse("+"), 1).flip(0, 1) ==
        CubeSet::cylinder(SignSeq::parse("-"), 1));

  // <(+,+)> flipped over (1,2] is <(+,-)>; phi_2 of the union vanishes.
  auto pp = CubeSet::cylinder(SignSeq::parse("++"), 2);
  auto flipped = pp.flip(1, 2);
  CHECK(flipped == CubeSet::cylinder(SignSeq::parse("+-"), 2));
  CHECK((pp | flipped).phi(2).is_zero());
}

TEST_CASE("flip balances disjoint unions coordinatewise") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 30; ++rep) {
    unsigned n = 4 + static_cast<unsigned>(rng() % 4);
    auto a = random_set(rng, n, 0.3);
    unsigned lo = static_cast<unsigned>(rng() % (n - 1));
    unsigned hi = lo + 1 + static_cast<unsigned>(rng() % (n - lo));
    auto f = a.flip(lo, hi);
    if ((a & f).is_empty()) {
      for (unsigned r = lo + 1; r <= hi; ++r) CHECK((a | f).phi(r).is_zero());
    }
  }
}

TEST_CASE("psi closed form equals brute force") {
  auto pp = CubeSet::cylinder(SignSeq::parse("++"), 2);
  CHECK(pp.psi(1).to_rational() == rat(1, 4));
  CHECK(pp.psi(1) == psi_brute(pp, 1));

  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_set(rng, 5);
    for (unsigned n = 1; n <= 3; ++n) CHECK(a.psi(n) == psi_brute(a, n));
    CHECK(a.psi(5).is_zero());
  }
}

TEST_CASE("encode / decode round trip and canonical form") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    unsigned n = 1 + static_cast<unsigned>(rng() % 9);
    auto a = random_set(rng, n);
    CHECK(CubeSet::decode(a.encode()) == a);
    // canonical encoding is refinement-invariant
    CHECK(a.refined(n + 2).canonical_encode() == a.canonical_encode());
  }
  CHECK(CubeSet::full(4).canonical_resolution() == 1);
}

TEST_CASE("dyadic arithmetic stays canonical") {
  Dyadic half(Int(1), 1), quarter(Int(1), 2);
  CHECK((half + quarter).str() == "3/4");
  CHECK((half - half).is_zero());
  CHECK((half - half).exponent() == 0);
  CHECK(half > quarter);
  CHECK(parse_fraction("3/6") == Rational(1, 2));
  CHECK(fraction_str(Rational(-4, 8)) == "-1/2");
  CHECK(fraction_str(Rational(6, 3)) == "2");
  CHECK_THROWS(parse_fraction("1/0"));
  CHECK_THROWS(parse_fraction("x"));
}
