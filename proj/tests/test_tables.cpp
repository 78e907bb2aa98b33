#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "dirac/rootsystem.hpp"
#include "dirac/tables.hpp"

using namespace dirac;

TEST_CASE("dataset shapes") {
  auto a6 = load_dataset("A6");
  auto d6 = load_dataset("D6");
  auto e7 = load_dataset("E7");
  REQUIRE(a6.size() == 20);
  REQUIRE(d6.size() == 26);
  REQUIRE(e7.size() == 66);

  auto stars = [](const std::vector<ScatteredRow>& rows) {
    int n = 0;
    for (const auto& r : rows) n += r.starred ? 1 : 0;
    return n;
  };
  CHECK(stars(a6) == 12);
  CHECK(stars(d6) == 8);
  CHECK(stars(e7) == 0);

  for (const auto& r : e7) CHECK(r.mult == 1);
  CHECK_THROWS_AS(load_dataset("E6"), ConfigError);
}

TEST_CASE("pinned rows") {
  auto a6 = load_dataset("A6");
  CHECK(a6[0].s_rho == from_integral({3, -5, 3, 3, -5, 3}));
  CHECK(a6[0].lambda == Weight{1, 1, 1, 1, 1, 1});
  CHECK(a6[0].spin_lkt == from_integral({1, 1, 1, 1, 1, 1}));
  CHECK(a6[0].row_id == 1);

  auto e7 = load_dataset("E7");
  CHECK(e7[0].s_rho == from_integral({-2, 6, 7, -8, 6, 1, -3}));
  CHECK(e7[0].lambda == Weight{2, 1, 1, 1, 1, 1, 1});
  CHECK(e7[0].spin_lkt == from_integral({1, 1, 0, 2, 1, 1, 1}));

  // The final row is the trivial representation: s = w0, lambda = rho,
  // spin-lowest K-type 0.
  const auto& last = e7.back();
  CHECK(last.s_rho == from_integral({-1, -1, -1, -1, -1, -1, -1}));
  CHECK(last.lambda == Weight{2, 2, 2, 2, 2, 2, 2});
  CHECK(last.spin_lkt == Weight(7, 0));
  CHECK(last.row_id == 66);
}

TEST_CASE("an involution may carry several rows") {
  auto a6 = load_dataset("A6");
  std::map<Weight, int> freq;
  for (const auto& r : a6) ++freq[r.s_rho];
  CHECK(freq.at(from_integral({-5, 3, -1, -1, 3, -5})) == 2);
  CHECK(freq.at(from_integral({-1, -1, -1, -1, -1, -1})) == 4);

  auto e7 = load_dataset("E7");
  std::map<Weight, int> freq7;
  for (const auto& r : e7) ++freq7[r.s_rho];
  CHECK(freq7.at(from_integral({-1, 1, -1, -3, 1, -3, 1})) == 2);
}

TEST_CASE("unfold") {
  RootDatum a6d = build_root_datum("A6");
  RootDatum d6d = build_root_datum("D6");
  RootDatum e7d = build_root_datum("E7");
  auto a6 = unfold(a6d, load_dataset("A6"));
  auto d6 = unfold(d6d, load_dataset("D6"));
  auto e7 = unfold(e7d, load_dataset("E7"));
  CHECK(a6.size() == 32);
  CHECK(d6.size() == 34);
  CHECK(e7.size() == 66);

  // Unfolded rows are pairwise distinct as (s_rho, lambda) keys.
  std::set<std::pair<Weight, Weight>> keys;
  for (const auto& r : a6) keys.insert({r.s_rho, r.lambda});
  CHECK(keys.size() == a6.size());

  ScatteredRow selfdual;
  selfdual.group = "A6";
  selfdual.s_rho = from_integral({-1, -1, -1, -1, -1, -1});
  selfdual.lambda = {1, 1, 1, 1, 1, 1};
  selfdual.spin_lkt = Weight(6, 0);
  selfdual.starred = true;
  CHECK_THROWS_AS(unfold(a6d, {selfdual}), DataError);
}

TEST_CASE("dataset parsing is fail-closed") {
  CHECK_THROWS_AS(detail::parse_dataset("no header\n", "A6"), DataError);
  CHECK_THROWS_AS(detail::parse_dataset("group\tsrho\n", "A6"), DataError);
  std::string header = "group\tsrho\tlambda2\tspin_lkt\tmult\tstar\tnote\n";
  CHECK_THROWS_AS(
      detail::parse_dataset(header + "D6\t-1,-1\t1,1\t0,0\t1\t0\t\n", "A6"),
      DataError);
  CHECK_THROWS_AS(
      detail::parse_dataset(header + "A6\t-1,x\t1,1\t0,0\t1\t0\t\n", "A6"),
      DataError);
  CHECK_THROWS_AS(
      detail::parse_dataset(header + "A6\t-1,-1\t1,1\t0,0\t2\t0\t\n", "A6"),
      DataError);
  CHECK_THROWS_AS(
      detail::parse_dataset(header + "A6\t-1,-1\t1,1\t0,0\t1\t3\t\n", "A6"),
      DataError);
  CHECK_THROWS_AS(load_dataset("A6", "no_such_dir"), ConfigError);
}

TEST_CASE("the data directory copy matches the embedded copy") {
  for (const auto& g : {"A6", "D6", "E7"}) {
    auto from_dir = load_dataset(g, DIRAC_DATA_DIR);
    auto embedded = load_dataset(g);
    REQUIRE(from_dir.size() == embedded.size());
    for (size_t i = 0; i < embedded.size(); ++i) {
      CHECK(from_dir[i].s_rho == embedded[i].s_rho);
      CHECK(from_dir[i].lambda == embedded[i].lambda);
      CHECK(from_dir[i].spin_lkt == embedded[i].spin_lkt);
      CHECK(from_dir[i].starred == embedded[i].starred);
    }
  }
}

TEST_CASE("verify_row") {
  RootDatum e7 = build_root_datum("E7");
  PencilCache pencils;
  auto rows = load_dataset("E7");

  VerificationReport ok = verify_row(e7, rows[0], pencils, Rat(464));
  CHECK(ok.passed);
  CHECK_FALSE(ok.bound_exempt);

  VerificationReport trivial = verify_row(e7, rows.back(), pencils, Rat(464));
  CHECK(trivial.passed);
  CHECK(trivial.bound_exempt);

  ScatteredRow perturbed = rows[0];
  perturbed.lambda = {2, 1, 1, 1, 1, 1, 3};  // a different sieve candidate
  VerificationReport bad = verify_row(e7, perturbed, pencils, Rat(464));
  CHECK_FALSE(bad.passed);
  std::map<std::string, bool> checks(bad.checks.begin(), bad.checks.end());
  CHECK(checks.at("lambda_membership"));
  CHECK_FALSE(checks.at("spin_norm_equality"));

  ScatteredRow corrupted = rows[0];
  corrupted.s_rho = Weight(7, 0);  // not in the regular orbit
  VerificationReport rec = verify_row(e7, corrupted, pencils, Rat(464));
  CHECK_FALSE(rec.passed);
  std::map<std::string, bool> checks2(rec.checks.begin(), rec.checks.end());
  CHECK_FALSE(checks2.at("involution_recovery"));
}

TEST_CASE("verify_group passes on all three datasets") {
  struct Case {
    const char* group;
    bool cross_check;
  };
  for (const Case& c : {Case{"A6", false}, Case{"D6", false},
                           Case{"E7", true}}) {
    RootDatum d = build_root_datum(c.group);
    auto rows = load_dataset(c.group);
    PencilCache pencils;
    Rat bound = d.type_label == "E7" ? Rat(464) : norm_sq(d, scale(2, d.rho));
    VerifySummary summary =
        verify_group(d, rows, pencils, bound, c.cross_check, 2);
    CHECK(summary.total == static_cast<int>(rows.size()));
    CHECK(summary.passed == summary.total);
    if (c.cross_check) {
      CHECK(summary.sieve_inclusion_checked);
      CHECK(summary.sieve_inclusion_ok);
    }
    nlohmann::json j = summary_to_json(summary);
    CHECK(j["total"] == summary.total);
    CHECK(j["passed"] == summary.passed);
    REQUIRE(j["rows"].size() == rows.size());
    CHECK(j["rows"][0]["recorded_not_verified"] ==
          std::vector<std::string>{"mult", "note"});
  }
}
