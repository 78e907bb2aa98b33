#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dirac/rootsystem.hpp"
#include "dirac/sieve.hpp"
#include "dirac/spinnorm.hpp"
#include "dirac/weylgroup.hpp"

using namespace dirac;

namespace {

InvolutionRecord record_from_srho(const RootDatum& d, const Weight& srho2) {
  return make_involution_record(d, from_regular_image(d, srho2));
}

const Weight kSrhoA = {-4, 12, 14, -16, 12, 2, -6};    // doubled
const Weight kSrhoB = {-34, -2, 30, -2, -2, -2, -2};   // doubled

}  // namespace

TEST_CASE("lambda_in_Lambda_s") {
  RootDatum e7 = build_root_datum("E7");
  InvolutionRecord s = record_from_srho(e7, kSrhoA);

  Weight lam = {2, 1, 1, 1, 1, 1, 1};  // lambda = [1,1/2,...,1/2]
  CHECK(lambda_in_Lambda_s(e7, s, lam));
  Parameter p = make_parameter(e7, s, lam);
  CHECK(p.lambda_plus == from_integral({0, 4, 4, -4, 4, 1, -1}));
  CHECK(p.lambda_minus == from_integral({2, -3, -3, 5, -3, 0, 2}));
  CHECK(is_dominant_weight(p.lkt));
  CHECK(norm_sq(e7, p.lambda_minus) == Rat(18));

  // All-halves fails the integrality bullet for this s.
  CHECK_FALSE(lambda_in_Lambda_s(e7, s, Weight{1, 1, 1, 1, 1, 1, 1}));
  // Nonpositive coordinates are excluded outright.
  CHECK_FALSE(lambda_in_Lambda_s(e7, s, Weight{0, 1, 2, 1, 1, 1, 1}));
  CHECK_THROWS_AS(lambda_in_Lambda_s(e7, s, Weight{1, 1}), UsageError);

  // The identity admits every strictly positive half-integral lambda.
  InvolutionRecord e = make_involution_record(e7, identity_element(7));
  CHECK(lambda_in_Lambda_s(e7, e, Weight{1, 3, 2, 1, 5, 1, 1}));
  CHECK_THROWS_AS(make_parameter(e7, s, Weight{1, 1, 1, 1, 1, 1, 1}),
                  UsageError);
}

TEST_CASE("sieve on the pinned rank-7 involution") {
  RootDatum e7 = build_root_datum("E7");
  InvolutionRecord s = record_from_srho(e7, kSrhoA);
  PencilCache pencils;
  SieveReport rep = enumerate_candidates(e7, s, Rat(464), pencils);

  REQUIRE(rep.candidates.size() == 6);
  CHECK_FALSE(rep.truncated);
  CHECK(rep.enumeration_box > 0);

  std::set<Weight> got;
  for (const auto& c : rep.candidates) got.insert(c.lambda);
  std::set<Weight> expected = {
      {1, 1, 2, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 3},
      {2, 1, 1, 1, 2, 1, 2}, {2, 3, 1, 1, 1, 1, 1}, {3, 1, 2, 1, 1, 1, 1}};
  CHECK(got == expected);

  CHECK(std::is_sorted(rep.candidates.begin(), rep.candidates.end(),
                       [](const Parameter& a, const Parameter& b) {
                         return a.lambda < b.lambda;
                       }));
  for (const auto& c : rep.candidates) {
    REQUIRE(validate_candidate(e7, c, Rat(464), pencils));
    REQUIRE(cheap_bound_holds(e7, c.lambda_minus, c.lambda_plus));
    // Pythagoras: the eigenspace split is orthogonal.
    REQUIRE(norm_sq(e7, c.lambda_plus) + norm_sq(e7, c.lambda_minus) ==
            4 * norm_sq(e7, c.lambda));
  }
}

TEST_CASE("sieve on the longest element") {
  RootDatum e7 = build_root_datum("E7");
  InvolutionRecord w0 = record_from_srho(e7, scale(-1, e7.rho));
  PencilCache pencils;
  SieveReport rep = enumerate_candidates(e7, w0, Rat(464), pencils);

  CHECK(rep.candidates.size() == 116);
  CHECK_FALSE(rep.truncated);
  std::set<Weight> got;
  for (const auto& c : rep.candidates) got.insert(c.lambda);
  CHECK(got.count(Weight{1, 1, 1, 1, 1, 1, 2}) == 1);
  // lambda = rho fails the bound: for w0, ||lambda - s lambda||^2 = ||2 rho||^2.
  CHECK(got.count(Weight{2, 2, 2, 2, 2, 2, 2}) == 0);
  for (const auto& c : rep.candidates)
    REQUIRE(validate_candidate(e7, c, Rat(464), pencils));
}

TEST_CASE("sieve on the pinned rank-3 involution") {
  RootDatum e7 = build_root_datum("E7");
  InvolutionRecord s = record_from_srho(e7, kSrhoB);
  PencilCache pencils;
  SieveReport rep = enumerate_candidates(e7, s, Rat(464), pencils);
  CHECK(rep.candidates.size() == 241);
  std::set<Weight> got;
  for (const auto& c : rep.candidates) got.insert(c.lambda);
  CHECK(got.count(Weight{1, 2, 1, 2, 2, 2, 2}) == 1);
}

TEST_CASE("sieve rejects inapplicable involutions") {
  RootDatum e7 = build_root_datum("E7");
  PencilCache pencils;
  InvolutionRecord e = make_involution_record(e7, identity_element(7));
  // The identity fixes every fundamental weight; the scattered sieve
  // requires I(s) empty.
  REQUIRE_FALSE(e.fixed_set.empty());
  CHECK_THROWS_AS(enumerate_candidates(e7, e, Rat(464), pencils), UsageError);

  InvolutionRecord s = record_from_srho(e7, kSrhoA);
  CHECK_THROWS_AS(enumerate_candidates(e7, s, Rat(0), pencils), UsageError);
  CHECK_THROWS_AS(enumerate_candidates(e7, s, Rat(-3), pencils), UsageError);
}

TEST_CASE("sieve_all is worker-count independent") {
  RootDatum a6 = build_root_datum("A6");
  auto involutions = enumerate_involutions(a6);
  Rat bound = norm_sq(a6, scale(2, a6.rho));
  PencilCache p1, p4;
  auto r1 = sieve_all(a6, involutions, bound, p1, 1);
  auto r4 = sieve_all(a6, involutions, bound, p4, 4);
  REQUIRE(r1.size() == r4.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    REQUIRE(r1[i].s.s_rho == r4[i].s.s_rho);
    REQUIRE(report_to_json(r1[i]).dump() == report_to_json(r4[i]).dump());
  }
}

TEST_CASE("report_to_json schema") {
  RootDatum e7 = build_root_datum("E7");
  InvolutionRecord s = record_from_srho(e7, kSrhoA);
  PencilCache pencils;
  SieveReport rep = enumerate_candidates(e7, s, Rat(464), pencils);
  nlohmann::json j = report_to_json(rep);
  REQUIRE(j.contains("srho"));
  REQUIRE(j.contains("candidates"));
  REQUIRE(j.contains("truncated"));
  CHECK(j["srho"] == std::vector<long long>{-2, 6, 7, -8, 6, 1, -3});
  CHECK(j["truncated"] == false);
  REQUIRE(j["candidates"].size() == 6);
  for (const auto& c : j["candidates"]) {
    REQUIRE(c.contains("lambda2"));
    REQUIRE(c.contains("lkt"));
    REQUIRE(c["lambda2"].size() == 7);
    REQUIRE(c["lkt"].size() == 7);
  }
}

TEST_CASE("diagram_dual of a parameter") {
  RootDatum a6 = build_root_datum("A6");
  InvolutionRecord w0 = record_from_srho(a6, negate(diagram_dual(a6, a6.rho)));
  // In A6 the longest element acts by minus the diagram automorphism, so
  // -rho's dual image is in the rho-orbit by construction.
  Weight lam = {1, 1, 1, 1, 1, 1};
  if (lambda_in_Lambda_s(a6, w0, lam)) {
    Parameter p = make_parameter(a6, w0, lam);
    Parameter q = diagram_dual(a6, p);
    CHECK(q.lambda == diagram_dual(a6, p.lambda));
    CHECK(q.s.s_rho == diagram_dual(a6, p.s.s_rho));
    CHECK(norm_sq(a6, q.lambda_minus) == norm_sq(a6, p.lambda_minus));
  }
}
