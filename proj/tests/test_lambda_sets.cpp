#include <doctest.h>

#include <random>
#include <set>

#include "ppdim/lambda_sets.hpp"

using namespace ppdim;

TEST_CASE("band membership is an exact comparison") {
  CHECK(band_contains(Rational(6), Rational(1, 4)));    // 3/16 > 1/6
  CHECK(!band_contains(Rational(6), Rational(1, 6)));   // 5/36 < 1/6
  CHECK(band_contains(Rational(5), Rational(1, 2)));    // 1/4 > 1/5
  CHECK(band_contains(Rational(1000000007), Rational(1, 2)));
  CHECK_THROWS_AS(band_contains(Rational(4), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(band_contains(Rational(6), Rational(3, 2)), std::domain_error);
}

TEST_CASE("band is symmetric under alpha -> 1 - alpha") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(0, 100), den(1, 100);
  for (int it = 0; it < 200; ++it) {
    long long q = den(rng);
    long long p = num(rng) % (q + 1);
    Rational alpha(p, q);
    Rational index(den(rng) + 4, 1);
    CHECK(band_contains(index, alpha) == band_contains(index, Rational(1) - alpha));
  }
}

TEST_CASE("ladder prefixes match the continued-fraction displays") {
  auto l4 = lambda_ladder(4, 4);
  CHECK(l4.from_zero == std::vector<Rational>{Rational(0), Rational(4, 3), Rational(8, 5),
                                              Rational(12, 7)});
  CHECK(l4.from_one == std::vector<Rational>{Rational(1), Rational(3, 2), Rational(5, 3),
                                             Rational(7, 4)});
  auto l5 = lambda_ladder(5, 2);
  CHECK(l5.from_one[1] == Rational(4, 3));  // 1 + 1/(n-2)
  CHECK(l5.from_zero[1] == Rational(5, 4)); // 1 + 1/(n-1)
}

TEST_CASE("ladders increase strictly and stay below the interval edge") {
  for (long long n : {4, 5, 6, 9}) {
    auto l = lambda_ladder(n, 40);
    for (const auto* seq : {&l.from_zero, &l.from_one}) {
      for (std::size_t i = 1; i < seq->size(); ++i) CHECK((*seq)[i - 1] < (*seq)[i]);
      for (const Rational& x : *seq) CHECK(x * (Rational(n) - x) < Rational(n));
      CHECK(seq->back() < Rational(n, 2));
    }
  }
}

TEST_CASE("the n = 3 ladders terminate in the finite orbit") {
  auto l3 = lambda_ladder(3, 50);
  CHECK(l3.from_zero == std::vector<Rational>{Rational(0), Rational(3, 2), Rational(3)});
  CHECK(l3.from_one == std::vector<Rational>{Rational(1), Rational(2)});
}

TEST_CASE("phi4 closed form equals the literal iteration") {
  CHECK(phi4_closed_form(0) == Rational(1));
  CHECK(phi4_closed_form(1) == Rational(3, 2));
  CHECK(phi4_closed_form(3) == Rational(7, 4));
  for (std::uint64_t k = 0; k <= 64; ++k) CHECK(phi4_closed_form(k) == phi4_iterate(k));
}

TEST_CASE("sigma membership") {
  CHECK(sigma_membership(Rational(3, 2), 4).member);   // ladder from 1
  CHECK(!sigma_membership(Rational(1, 2), 4).member);
  CHECK(sigma_membership(Rational(2), 4).member);      // the degenerate interval {2}
  CHECK(sigma_membership(Rational(2), 4).witness == "interval [rt, r-rt]");
  CHECK(sigma_membership(Rational(9, 4), 4).member);   // 4 - 7/4, reflected ladder
  CHECK(!sigma_membership(Rational(11, 7), 4).member); // 2 - 3/7 misses both ladders
  CHECK(sigma_membership(Rational(5, 2), 4).member);   // 4 - 3/2, reflected ladder
  CHECK(sigma_membership(Rational(4, 3), 4).member);   // ladder from 0
  CHECK(sigma_membership(Rational(3, 2), 5).member);    // inside [5t, 5-5t]
  CHECK(sigma_membership(Rational(5, 4), 5).member);    // first nonzero ladder term
  CHECK(!sigma_membership(Rational(13, 10), 5).member); // between ladder terms
  CHECK(sigma_membership(Rational(11, 8), 5).member);   // deep ladder term
  CHECK(!sigma_membership(Rational(-1, 2), 4).member);
  CHECK(!sigma_membership(Rational(9, 2), 4).member);

  // r = 1, 2, 3: the ladders collapse to the classical finite sets.
  for (long long s = 0; s <= 1; ++s) CHECK(sigma_membership(Rational(s), 1).member);
  CHECK(!sigma_membership(Rational(1, 2), 1).member);
  for (long long s = 0; s <= 2; ++s) CHECK(sigma_membership(Rational(s), 2).member);
  CHECK(!sigma_membership(Rational(1, 2), 2).member);
  CHECK(!sigma_membership(Rational(3, 2), 2).member);
  CHECK(sigma_membership(Rational(3, 2), 3).member);
  CHECK(!sigma_membership(Rational(4, 3), 3).member);
  CHECK(!sigma_membership(Rational(5, 3), 3).member);
}

TEST_CASE("spin families for order 6") {
  auto fams = known_families(SpinModel{6});
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : fams) seen.insert({e.family, e.value.str()});

  CHECK(seen.count({"multiples", "1/6"}));
  CHECK(seen.count({"midpoint", "1/2"}));
  CHECK(seen.count({"reciprocal", "1/4"}));
  CHECK(seen.count({"complement-of-reciprocal", "3/4"}));

  for (const auto& e : fams) {
    // in_band flags agree with the exact test, and complements are closed.
    if (e.value > Rational(0) && e.value < Rational(1))
      CHECK(e.in_band == band_contains(Rational(6), e.value));
    bool complement_present = false;
    for (const auto& f : fams)
      if (f.value == Rational(1) - e.value) complement_present = true;
    CHECK(complement_present);
    // inf of the positive values is 1/index.
    if (!e.value.is_zero()) CHECK(e.value >= Rational(1, 6));
  }
}

TEST_CASE("reciprocal band coverage matches the proven range") {
  auto fams = known_families(SpinModel{6});
  for (const auto& e : fams) {
    if (e.family != "reciprocal") continue;
    const auto k = e.value.den();
    const bool in_proved_range = k >= 2 && k <= 4;  // 2..n-2
    CHECK(e.covered == in_proved_range);
    if (in_proved_range) CHECK(e.in_band);
  }
}

TEST_CASE("vertex families for order 3") {
  auto fams = known_families(VertexModel{3});
  bool found = false;
  for (const auto& e : fams)
    if (e.family == "reciprocal" && e.value == Rational(1, 6)) {
      found = true;
      CHECK(e.in_band);  // 5/36 > 1/9
    }
  CHECK(found);
  for (const auto& e : fams)
    if (!e.value.is_zero()) CHECK(e.value >= Rational(1, 9));
}

TEST_CASE("unitary-onb families") {
  auto fams = known_families(UnitaryOnbModel{5});
  std::set<std::string> values;
  for (const auto& e : fams) values.insert(e.value.str());
  for (long long m = 0; m <= 5; ++m) CHECK(values.count(Rational(m, 5).str()));
}

TEST_CASE("gamma sequences") {
  auto g = gamma_sequence(3, 0, 1, 3);
  CHECK(g[0].value == Rational(1, 4));  // (2 - 1/2)/6
  CHECK(g[0].limit == Rational(1, 3));
  CHECK(g[0].in_band_spin);
  CHECK(g[0].in_band_vertex);

  auto g2 = gamma_sequence(3, 2, 1, 1);
  CHECK(g2[0].value == Rational(7, 12));
  CHECK(g2[0].in_band_spin);  // 35/144 > 24/144

  for (long long n : {3, 4, 5}) {
    for (long long i = 0; i <= 2 * n - 4; i += (n > 3 ? 2 : 1)) {
      auto seq = gamma_sequence(n, i, 1, 12);
      for (std::size_t m = 1; m < seq.size(); ++m) CHECK(seq[m - 1].value < seq[m].value);
      for (const auto& e : seq) {
        CHECK(e.value < e.limit);
        CHECK(e.in_band_spin);
        CHECK(e.in_band_vertex);
      }
    }
  }
  CHECK_THROWS_AS(gamma_sequence(3, 3, 1, 2), std::invalid_argument);  // i > 2n-4
}

TEST_CASE("popa orbit") {
  auto orbit = popa_orbit(Rational(6), Rational(1, 4), 20);
  CHECK(orbit.values[1] == Rational(2, 9));
  CHECK(orbit.values[2] == Rational(3, 14));
  for (std::size_t s = 1; s < orbit.values.size(); ++s) {
    CHECK(orbit.values[s] < orbit.values[s - 1]);
    CHECK(orbit.values[s] * (Rational(1) - orbit.values[s]) > Rational(1, 6));
  }
  // The exact surrogate value(1-value) decreases monotonically toward 1/6.
  for (std::size_t s = 1; s < orbit.values.size(); ++s) {
    auto f = [](const Rational& x) { return x * (Rational(1) - x); };
    CHECK(f(orbit.values[s]) < f(orbit.values[s - 1]));
  }
  CHECK_THROWS_AS(popa_orbit(Rational(6), Rational(1, 6), 3), std::domain_error);
  CHECK_THROWS_AS(popa_orbit(Rational(6), Rational(1, 2), 3), std::domain_error);
}

TEST_CASE("fixed point bracketing: sign of g(x) - x matches the band surrogate") {
  const Rational index(6);
  const Rational lambda = Rational(1) / index;
  for (const Rational& x : {Rational(1, 5), Rational(1, 4), Rational(2, 9), Rational(1, 10)}) {
    const Rational gx = lambda / (Rational(1) - x);
    const Rational lhs = gx - x;
    const Rational rhs = lambda - x * (Rational(1) - x);
    CHECK((lhs > Rational(0)) == (rhs > Rational(0)));
    CHECK((lhs == Rational(0)) == (rhs == Rational(0)));
  }
}

TEST_CASE("zeta matrix values and distinctness") {
  auto zm = zeta_matrix(3, 0, 1, 5, 5);
  CHECK(zm.rows[0][0] == Rational(1, 4));
  CHECK(zm.rows[0][1] == Rational(3, 14));
  CHECK(zm.rows[0][2] == Rational(11, 52));
  CHECK(zm.pairwise_distinct);

  // The two-step map agrees with (2n - 1/(1-x))^{-1} on every entry.
  const Rational two_n(6);
  for (const auto& row : zm.rows)
    for (std::size_t k = 1; k < row.size(); ++k) {
      const Rational direct = Rational(1) / (two_n - Rational(1) / (Rational(1) - row[k - 1]));
      CHECK(direct == row[k]);
    }
}
