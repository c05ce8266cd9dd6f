#include <doctest.h>

#include "ppdim/json_io.hpp"
#include "ppdim/projection_sums.hpp"

#include <nlohmann/json.hpp>

using namespace ppdim;

TEST_CASE("feasibility via Sigma_r and integrality") {
  CHECK(feasibility(4, Rational(3, 2), 4).feasible);
  CHECK(!feasibility(4, Rational(1, 2), 2).feasible);
  for (long long n : {1, 2, 3, 7}) CHECK(feasibility(4, Rational(2), n).feasible);
  // Integrality clause alone can fail.
  auto f = feasibility(4, Rational(4, 3), 4);
  CHECK(!f.feasible);
  CHECK(f.reason == "N*beta not an integer");
  CHECK(feasibility(4, Rational(4, 3), 3).feasible);
}

TEST_CASE("exact construction: the 120-degree triple") {
  auto t = exact_construct(3, Rational(3, 2), 2);
  REQUIRE(t.has_value());
  CHECK(t->projections.size() == 3);
  CHECK(t->residuals.sum < 1e-14);
  CHECK(t->residuals.idempotency < 1e-14);
  CHECK(t->residuals.hermiticity < 1e-14);
  CHECK(t->ranks() == std::vector<long long>{1, 1, 1});
}

TEST_CASE("exact construction: half-odd beta on larger even dimension") {
  auto t = exact_construct(4, Rational(3, 2), 4);
  REQUIRE(t.has_value());
  CHECK(t->projections.size() == 4);
  CHECK(t->dim() == 4);
  CHECK(t->valid(1e-13));
}

TEST_CASE("exact construction: integer beta is identities plus zeros") {
  auto t = exact_construct(4, Rational(2), 3);
  REQUIRE(t.has_value());
  CHECK(t->valid(1e-15));
  CHECK(t->ranks() == std::vector<long long>{3, 3, 0, 0});
}

TEST_CASE("exact construction falls through on unreachable instances") {
  // 7/4 on C^4 is feasible but outside the closed-form moves.
  CHECK(!exact_construct(4, Rational(7, 4), 4).has_value());
  CHECK_THROWS_AS(exact_construct(4, Rational(1, 2), 2), std::domain_error);
}

TEST_CASE("solver finds a small instance and rejects infeasible ones") {
  SolveOptions opts;
  opts.seed = 7;
  opts.restarts = 30;
  auto t = solve_sum(4, Rational(7, 4), 4, opts);
  CHECK(t.residuals.sum < 1e-8);
  CHECK(t.residuals.idempotency < 1e-9);
  CHECK(t.valid(1e-7));
  CHECK_THROWS_AS(solve_sum(4, Rational(1, 2), 2, opts), std::domain_error);
}

TEST_CASE("solver agrees with the exact construction on (3, 3/2, 2)") {
  SolveOptions opts;
  opts.seed = 3;
  auto solved = solve_sum(3, Rational(3, 2), 2, opts);
  auto exact = exact_construct(3, Rational(3, 2), 2);
  REQUIRE(exact.has_value());
  // Same rank profile and the same residual scale; the tuples themselves can
  // differ by a unitary.
  CHECK(solved.ranks() == exact->ranks());
  CHECK(solved.residuals.sum < 1e-9);
}

TEST_CASE("complement move round-trips") {
  auto t = exact_construct(4, Rational(3, 2), 2);
  REQUIRE(t.has_value());
  auto c = complement_tuple(*t);
  CHECK(c.beta == Rational(5, 2));
  CHECK(c.valid(1e-13));
  auto back = complement_tuple(c);
  CHECK(back.beta == t->beta);
  CHECK(max_abs_diff(back.projections[0], t->projections[0]) < 1e-15);
}

TEST_CASE("oracle: dimension 1 and 2 case analysis") {
  auto r1 = brute_force_oracle(4, Rational(1, 2), 2);
  CHECK(!r1.feasible);

  auto r2 = brute_force_oracle(3, Rational(3, 2), 2);
  CHECK(r2.feasible);
  REQUIRE(r2.witness.has_value());
  CHECK(r2.witness->valid(1e-13));

  auto r3 = brute_force_oracle(2, Rational(1), 1);
  CHECK(r3.feasible);
  CHECK(r3.witness->valid(1e-15));
}

TEST_CASE("oracle agrees with feasibility on its entire domain") {
  for (long long r = 1; r <= 4; ++r) {
    for (long long n = 1; n <= 3; ++n) {
      for (long long s = 0; s <= r * n; ++s) {
        const Rational beta(s, n);
        const auto want = feasibility(r, beta, n).feasible;
        const auto got = brute_force_oracle(r, beta, n);
        INFO("r=", r, " N=", n, " beta=", beta.str());
        CHECK(got.feasible == want);
        if (got.witness) {
          CHECK(got.witness->valid(1e-12));
          CHECK(static_cast<long long>(got.witness->projections.size()) == r);
        }
      }
    }
  }
}

TEST_CASE("oracle rejects dimensions beyond its case analysis") {
  CHECK_THROWS_AS(brute_force_oracle(4, Rational(2), 4), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_oracle(5, Rational(2), 3), std::invalid_argument);
}

TEST_CASE("lambda certificates from the stage-1 grid") {
  auto base = exact_construct(4, Rational(3, 2), 4);
  REQUIRE(base.has_value());

  auto cert0 = certify_lambda_element(3, 1, *base, 0);
  CHECK(cert0.alpha == Rational(3, 8));
  CHECK(cert0.alpha_prime == Rational(1, 4));
  CHECK(cert0.expectation_residual < 1e-8);
  CHECK(cert0.in_band_spin);

  auto cert2 = certify_lambda_element(3, 1, *base, 2);
  CHECK(cert2.alpha_prime == Rational(7, 12));
  CHECK(cert2.in_band_spin);  // 35/144 > 24/144
  CHECK(cert2.in_band_vertex);

  CHECK_THROWS_AS(certify_lambda_element(3, 1, *base, 3), std::invalid_argument);

  CHECK(revalidate(cert0));
  CHECK(revalidate(cert2));
}

TEST_CASE("certificates survive a JSON round trip") {
  auto base = exact_construct(4, Rational(3, 2), 4);
  REQUIRE(base.has_value());
  auto cert = certify_lambda_element(3, 1, *base, 1);
  auto j = io::to_json(cert, "spin:6");
  auto loaded = io::certificate_from_json(j);
  CHECK(revalidate(loaded));
  CHECK(loaded.alpha_prime == cert.alpha_prime);

  // Tampering with the claimed value breaks revalidation.
  auto bad = j;
  bad["alpha"] = "1/2";
  CHECK(!revalidate(io::certificate_from_json(bad)));
}

TEST_CASE("projection tuple JSON round trip") {
  auto t = exact_construct(3, Rational(3, 2), 2);
  REQUIRE(t.has_value());
  auto j = io::to_json(*t);
  auto loaded = io::tuple_from_json(j);
  CHECK(loaded.beta == t->beta);
  CHECK(loaded.valid(1e-12));
  CHECK(max_abs_diff(loaded.projections[1], t->projections[1]) < 1e-15);
}
