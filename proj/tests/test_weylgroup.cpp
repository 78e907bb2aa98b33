#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dirac/rootsystem.hpp"
#include "dirac/weylgroup.hpp"

using namespace dirac;

namespace {

const std::vector<int> kWordA = {1, 4, 2, 3, 1, 5, 6, 7, 6, 5, 4};
const std::vector<int> kWordB = {1, 2, 3, 4, 2, 3, 4, 5, 4, 2, 3, 4, 5, 6,
                                 5, 4, 2, 3, 4, 5, 6, 7, 6, 5, 4, 2, 3, 1,
                                 4, 5, 6, 7};
const std::vector<int> kWordC = {7, 6, 4, 5, 6, 7, 2, 3, 4};

// All of W(A_n) realized as permutation matrices on the epsilon
// coordinates, converted back to matrices on the fundamental-weight basis.
// An independent oracle for the small ranks.
std::set<std::vector<std::vector<long long>>> permutation_matrices(int n) {
  RootDatum d = build_root_datum("A" + std::to_string(n));
  std::vector<int> sigma(n + 1);
  for (int i = 0; i <= n; ++i) sigma[i] = i;
  std::set<std::vector<std::vector<long long>>> out;
  do {
    std::vector<std::vector<long long>> mat(n, std::vector<long long>(n, 0));
    bool integral = true;
    for (int col = 0; col < n && integral; ++col) {
      // varpi_{col+1} in epsilon coordinates via its simple-root expansion.
      Weight basis(n, 0);
      basis[col] = 2;
      auto c = to_simple_root_basis(d, basis);
      std::vector<Rat> eps(n + 1, Rat(0));
      for (int j = 0; j < n; ++j) {
        eps[j] += c[j];
        eps[j + 1] -= c[j];
      }
      std::vector<Rat> peps(n + 1, Rat(0));
      for (int j = 0; j <= n; ++j) peps[sigma[j]] = eps[j];
      for (int row = 0; row < n; ++row) {
        Rat entry = peps[row] - peps[row + 1];
        if (entry.denominator() != 1) integral = false;
        mat[row][col] = entry.numerator();
      }
    }
    REQUIRE(integral);
    out.insert(std::move(mat));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST_CASE("from_word on the pinned example words") {
  RootDatum e7 = build_root_datum("E7");
  CHECK(dirac::apply(from_word(e7, kWordA), e7.rho) ==
        from_integral({-2, 6, 7, -8, 6, 1, -3}));
  CHECK(dirac::apply(from_word(e7, kWordB), e7.rho) ==
        from_integral({-17, -1, 15, -1, -1, -1, -1}));
  CHECK(dirac::apply(from_word(e7, kWordC), e7.rho) ==
        from_integral({3, 5, 5, -7, 5, 1, -3}));
  CHECK(is_involution(from_word(e7, kWordA)));
  CHECK(is_involution(from_word(e7, kWordB)));
  CHECK(is_involution(from_word(e7, kWordC)));

  CHECK(is_identity(from_word(e7, {})));
  CHECK(is_identity(from_word(e7, {3, 3})));
  CHECK_THROWS_AS(from_word(e7, {0}), UsageError);
  CHECK_THROWS_AS(from_word(e7, {8}), UsageError);
}

TEST_CASE("apply_word composes right-to-left") {
  RootDatum e7 = build_root_datum("E7");
  Weight mu = from_integral({1, 0, 0, 0, 0, 0, 0});
  // s1 s2 applied to mu: s2 fixes mu, then s1 reflects it.
  Weight expected = mu;
  reflect_simple(e7, 1, expected);
  reflect_simple(e7, 0, expected);
  CHECK(apply_word(e7, {1, 2}, mu) == expected);
  CHECK(apply_word(e7, kWordA, mu) == dirac::apply(from_word(e7, kWordA), mu));
}

TEST_CASE("from_regular_image") {
  RootDatum e7 = build_root_datum("E7");
  CHECK(is_identity(from_regular_image(e7, e7.rho)));

  WeylElement w0 = from_regular_image(e7, negate(e7.rho));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(w0.matrix[i][j] == (i == j ? -1 : 0));  // -1 is central in W(E7)

  Weight srho = from_integral({-2, 6, 7, -8, 6, 1, -3});
  WeylElement s = from_regular_image(e7, srho);
  CHECK(s.matrix == from_word(e7, kWordA).matrix);
  CHECK(dirac::apply(s, e7.rho) == srho);
  CHECK(apply_word(e7, *s.word, e7.rho) == srho);

  CHECK_THROWS_AS(from_regular_image(e7, Weight(7, 0)), NotInOrbitError);
  CHECK_THROWS_AS(from_regular_image(e7, from_integral({2, 1, 1, 1, 1, 1, 1})),
                  NotInOrbitError);
}

TEST_CASE("multiply, inverse, conjugate") {
  RootDatum e7 = build_root_datum("E7");
  WeylElement a = from_word(e7, kWordA);
  WeylElement b = from_word(e7, kWordC);
  CHECK(dirac::apply(multiply(a, b), e7.rho) == dirac::apply(a, dirac::apply(b, e7.rho)));
  CHECK(is_identity(multiply(a, inverse(a))));
  WeylElement ainv = inverse(a);
  REQUIRE(ainv.word.has_value());
  CHECK(apply_word(e7, *ainv.word, dirac::apply(a, e7.rho)) == e7.rho);

  // Conjugating the embedded rank-6 involution by s7 lands on the pinned
  // rank-7 one.
  WeylElement s6 = from_word(e7, {4, 5, 6, 5, 1, 3, 2, 4, 1});
  REQUIRE(is_involution(s6));
  WeylElement s7 = from_word(e7, {7});
  WeylElement s = conjugate(s7, s6);
  CHECK(is_involution(s));
  CHECK(dirac::apply(s, e7.rho) == from_integral({-2, 6, 7, -8, 6, 1, -3}));
}

TEST_CASE("group orders") {
  CHECK(group_order(build_root_datum("A1")) == 2);
  CHECK(group_order(build_root_datum("A2")) == 6);
  CHECK(group_order(build_root_datum("A6")) == 5040);
  CHECK(group_order(build_root_datum("D6")) == 23040);
}

TEST_CASE("small-rank permutation oracle") {
  for (int n : {2, 3}) {
    RootDatum d = build_root_datum("A" + std::to_string(n));
    auto oracle = permutation_matrices(n);

    std::set<std::vector<std::vector<long long>>> mine;
    std::vector<Weight> points;
    enumerate_group(d, [&](const std::array<int8_t, 8>& v, int rank) {
      Weight w(rank);
      for (int i = 0; i < rank; ++i) w[i] = 2 * v[i];
      points.push_back(std::move(w));
    });
    for (const auto& p : points)
      mine.insert(from_regular_image(d, p).matrix);
    REQUIRE(mine == oracle);

    // Involution census agrees with the brute-force filter of the oracle.
    std::set<Weight> oracle_srho;
    for (const auto& m : oracle) {
      WeylElement w{n, m, std::nullopt};
      if (is_involution(w)) oracle_srho.insert(dirac::apply(w, d.rho));
    }
    std::set<Weight> mine_srho;
    for (const auto& rec : enumerate_involutions(d))
      mine_srho.insert(rec.s_rho);
    REQUIRE(mine_srho == oracle_srho);
  }
}

TEST_CASE("involution census A1") {
  RootDatum a1 = build_root_datum("A1");
  auto records = enumerate_involutions(a1);
  REQUIRE(records.size() == 2);
  int empty_is = 0;
  for (const auto& r : records) empty_is += r.fixed_set.empty() ? 1 : 0;
  CHECK(empty_is == 1);
}

TEST_CASE("involution census D6 is closed under conjugation") {
  RootDatum d6 = build_root_datum("D6");
  auto records = enumerate_involutions(d6);
  CHECK(records.size() == 752);
  size_t empty_is = 0;
  std::set<Weight> census;
  for (const auto& r : records) {
    census.insert(r.s_rho);
    empty_is += r.fixed_set.empty() ? 1 : 0;
  }
  CHECK(empty_is == 477);
  REQUIRE(census.size() == records.size());
  CHECK(std::is_sorted(records.begin(), records.end(),
                       [](const auto& a, const auto& b) {
                         return a.s_rho < b.s_rho;
                       }));

  std::mt19937 rng(2718);
  std::uniform_int_distribution<size_t> pick(0, records.size() - 1);
  std::uniform_int_distribution<int> node(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& rec = records[pick(rng)];
    WeylElement si = from_word(d6, {node(rng)});
    WeylElement conj = conjugate(si, rec.element);
    REQUIRE(is_involution(conj));
    REQUIRE(census.count(dirac::apply(conj, d6.rho)) == 1);
  }
}

TEST_CASE("involution records round-trip through words") {
  RootDatum d5 = build_root_datum("D5");
  for (const auto& rec : enumerate_involutions(d5)) {
    REQUIRE(rec.element.word.has_value());
    REQUIRE(apply_word(d5, *rec.element.word, d5.rho) == rec.s_rho);
    REQUIRE(fixed_fundamental_weights(rec.element) == rec.fixed_set);
  }
}

TEST_CASE("property: random words round-trip via from_regular_image") {
  std::mt19937 rng(99);
  for (const auto& label : {"A6", "D6", "E7"}) {
    RootDatum d = build_root_datum(label);
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> letter(1, d.rank);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> word(len(rng));
      for (auto& l : word) l = letter(rng);
      WeylElement w = from_word(d, word);
      REQUIRE(from_regular_image(d, dirac::apply(w, d.rho)).matrix == w.matrix);
    }
  }
}

TEST_CASE("property: involutions split weights orthogonally") {
  // For an involution s, lambda + s.lambda and lambda - s.lambda are
  // eigenvectors for +1 and -1, hence orthogonal.
  RootDatum e7 = build_root_datum("E7");
  WeylElement s = from_word(e7, kWordA);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Weight lam(7);
    for (auto& x : lam) x = dist(rng);
    Weight slam = dirac::apply(s, lam);
    Weight plus = add(lam, slam);
    Weight minus = sub(lam, slam);
    REQUIRE(inner_product(e7, plus, minus) == Rat(0));
    REQUIRE(norm_sq(e7, plus) + norm_sq(e7, minus) ==
            4 * norm_sq(e7, lam));
  }
}

TEST_CASE("diagram_dual") {
  RootDatum a6 = build_root_datum("A6");
  CHECK(diagram_dual(a6, from_integral({-2, -1, -1, -1, 4, -5})) ==
        from_integral({-5, 4, -1, -1, -1, -2}));
  RootDatum d6 = build_root_datum("D6");
  CHECK(diagram_dual(d6, from_integral({-2, 4, -5, 4, -6, -2})) ==
        from_integral({-2, 4, -5, 4, -2, -6}));
  RootDatum e7 = build_root_datum("E7");
  Weight mu = from_integral({3, -1, 4, 1, -5, 9, 2});
  CHECK(diagram_dual(e7, mu) == mu);  // E7 has no diagram automorphism

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (const auto& label : {"A6", "D6", "E6"}) {
    RootDatum d = build_root_datum(label);
    for (int trial = 0; trial < 100; ++trial) {
      Weight x(d.rank), y(d.rank);
      for (auto& v : x) v = dist(rng);
      for (auto& v : y) v = dist(rng);
      REQUIRE(diagram_dual(d, diagram_dual(d, x)) == x);
      REQUIRE(inner_product(d, diagram_dual(d, x), diagram_dual(d, y)) ==
              inner_product(d, x, y));
    }
  }
}

TEST_CASE("census TSV shape") {
  RootDatum a2 = build_root_datum("A2");
  std::ostringstream out;
  write_census_tsv(out, enumerate_involutions(a2));
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "srho\tword\tfixed_set");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  }
  CHECK(rows == 4);  // W(A2) has 4 involutions including the identity
}
