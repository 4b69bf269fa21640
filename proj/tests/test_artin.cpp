#include <random>

#include "catch_amalgamated.hpp"
#include "deer/artin.hpp"
#include "support/oracles.hpp"

using namespace deer;

namespace {
  braid_word bw(int n, std::vector<std::pair<int, int>> const& letters) {
    braid_word w(n);
    for (auto [i, s] : letters) {
      w.push_back({i, s});
    }
    return w;
  }

  // Reconstruction of the example braid on 5 strands: strand 1 loops around
  // strand 2 and back, strands 2 and 3 swap, strands 4 and 5 twist once.
  braid_word figure_braid() {
    return bw(5, {{1, 1}, {1, 1}, {2, 1}, {1, -1}, {1, -1}, {4, 1}, {4, 1}});
  }

  // Inserts a random relator at a random position.
  braid_word insert_relator(braid_word const& w, std::mt19937_64& rng) {
    int const                          n = w.strands();
    std::uniform_int_distribution<int> kind_d(0, 2);
    std::uniform_int_distribution<int> idx_d(1, n - 1);
    std::uniform_int_distribution<std::size_t> pos_d(0, w.size());
    std::vector<artin_letter>          rel;
    int const                          i = idx_d(rng);
    switch (kind_d(rng)) {
      case 0:
        rel = {{i, 1}, {i, -1}};
        break;
      case 1:
        if (i + 1 <= n - 1) {
          rel = {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}};
        }
        break;
      default:
        if (i + 2 <= n - 1) {
          rel = {{i, 1}, {i + 2, 1}, {i, -1}, {i + 2, -1}};
        }
        break;
    }
    auto letters = w.letters();
    letters.insert(letters.begin() + static_cast<long>(pos_d(rng)), rel.begin(),
                   rel.end());
    return braid_word(n, letters);
  }

  braid_word random_one_pure(std::mt19937_64& rng, int n, int len) {
    for (;;) {
      auto w = oracle::random_braid(rng, n, len);
      if (is_pure(w, {1})) {
        return w;
      }
    }
  }
}  // namespace

TEST_CASE("normal form examples", "[artin]") {
  CHECK(compute_normal_form(bw(3, {{1, 1}, {1, -1}})) == normal_form{3, 0, {}});
  CHECK(compute_normal_form(bw(3, {{1, 1}, {2, 1}, {1, 1}}))
        == compute_normal_form(bw(3, {{2, 1}, {1, 1}, {2, 1}})));
  auto nf = compute_normal_form(named_braid(named::half_twist, 4));
  CHECK(nf.delta_power == 1);
  CHECK(nf.factors.empty());
  auto inv = compute_normal_form(named_braid(named::half_twist, 4).inverse());
  CHECK(inv.delta_power == -1);
  CHECK(inv.factors.empty());
}

TEST_CASE("normal form factors are left-weighted and proper", "[artin]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int const n  = 3 + trial % 3;
    auto      w  = oracle::random_braid(rng, n, 25);
    auto      nf = compute_normal_form(w);
    for (std::size_t k = 0; k < nf.factors.size(); ++k) {
      auto const& f = nf.factors[k];
      bool        trivial = true, delta = true;
      for (int p = 0; p < n; ++p) {
        trivial = trivial && f[static_cast<std::size_t>(p)] == p;
        delta   = delta && f[static_cast<std::size_t>(p)] == n - 1 - p;
      }
      CHECK_FALSE(trivial);
      CHECK_FALSE(delta);
      if (k + 1 < nf.factors.size()) {
        auto const& g = nf.factors[k + 1];
        std::vector<int> finv(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
          finv[static_cast<std::size_t>(f[static_cast<std::size_t>(p)])] = p;
        }
        for (int i = 0; i + 1 < n; ++i) {
          bool const g_starts = g[static_cast<std::size_t>(i)]
                                > g[static_cast<std::size_t>(i + 1)];
          bool const f_ends = finv[static_cast<std::size_t>(i)]
                              > finv[static_cast<std::size_t>(i + 1)];
          CHECK((!g_starts || f_ends));
        }
      }
    }
    CHECK(equal(to_word(nf), w));
    CHECK(oracle::free_equal(to_word(nf), w));
  }
}

TEST_CASE("equal agrees with the free group action", "[artin]") {
  std::mt19937_64 rng(2024);
  int             agree_equal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int const n = 3 + trial % 3;
    auto      u = oracle::random_braid(rng, n, 10);
    auto      v = u;
    int const k = 1 + trial % 3;
    for (int j = 0; j < k; ++j) {
      v = insert_relator(v, rng);
    }
    REQUIRE(equal(u, v));
    REQUIRE(oracle::free_equal(u, v));
    ++agree_equal;
    auto w = oracle::random_braid(rng, n, 6);
    REQUIRE(equal(u, w) == oracle::free_equal(u, w));
  }
  CHECK(agree_equal == 500);
  CHECK(equal(bw(3, {{1, 1}, {2, 1}, {1, 1}}), bw(3, {{2, 1}, {1, 1}, {2, 1}})));
  CHECK_FALSE(equal(bw(3, {{1, 1}}), bw(3, {{2, 1}})));
  CHECK_THROWS_AS(equal(bw(3, {}), bw(4, {})), std::invalid_argument);
}

TEST_CASE("permutations", "[artin]") {
  CHECK(induced_permutation(braid_word(3)).is_identity());
  CHECK(induced_permutation(bw(3, {{1, 1}})) == permutation::transposition(3, 1, 2));
  CHECK(induced_permutation(bw(3, {{1, -1}, {1, -1}, {2, 1}, {1, 1}, {1, 1}}))
        == permutation::transposition(3, 2, 3));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = oracle::random_braid(rng, 5, 12);
    auto v = oracle::random_braid(rng, 5, 12);
    CHECK(induced_permutation(u).images() == oracle::compose_transpositions(u));
    CHECK(induced_permutation(u * v)
          == induced_permutation(u).then(induced_permutation(v)));
  }
  CHECK_THROWS(braid_word(3, {{3, 1}}));
}

TEST_CASE("purity, straightness, strand removal", "[artin]") {
  CHECK(is_pure(bw(3, {{1, 1}, {1, 1}}), {1}));
  CHECK_FALSE(is_pure(bw(3, {{1, 1}}), {1}));
  auto fig = figure_braid();
  CHECK(is_pure(fig, {1, 4, 5}));
  CHECK(is_trivial(remove_strands(fig, {1, 4})));
  CHECK(is_straight(fig, {1, 4}));
  CHECK(is_straight(fig, {1, 5}));
  CHECK_FALSE(is_straight(fig, {4, 5}));
  CHECK(winding(fig) == 0);

  CHECK(remove_strands(bw(3, {{1, 1}, {2, 1}, {1, -1}}), {1, 2, 3})
        == bw(3, {{1, 1}, {2, 1}, {1, -1}}));
  CHECK(remove_strands(bw(3, {{2, 1}}), {1, 2}).empty());
  CHECK(is_straight(braid_word(4), {1, 3}));
  CHECK_FALSE(is_straight(bw(3, {{1, 1}, {1, 1}}), {1, 2}));

  std::mt19937_64 rng(77);
  std::set<int>   keep{1, 3, 4};
  for (int trial = 0; trial < 100; ++trial) {
    braid_word u(5), v(5);
    do {
      u = oracle::random_braid(rng, 5, 10);
    } while (!is_pure(u, keep));
    do {
      v = oracle::random_braid(rng, 5, 10);
    } while (!is_pure(v, keep));
    CHECK(equal(remove_strands(u * v, keep),
                remove_strands(u, keep) * remove_strands(v, keep)));
  }
}

TEST_CASE("winding numbers", "[artin]") {
  CHECK(winding(bw(3, {{1, 1}, {1, 1}})) == 1);
  CHECK(winding(bw(3, {{1, -1}, {1, -1}, {2, 1}, {1, 1}, {1, 1}})) == 0);
  for (int r = 2; r <= 5; ++r) {
    CHECK(winding(named_braid(named::full_twist, r + 1)) == r);
  }
  CHECK_THROWS_AS(winding(bw(3, {{1, 1}})), std::domain_error);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = 3 + trial % 3;
    auto      g = random_one_pure(rng, n, 12);
    auto      x = random_one_pure(rng, n, 12);
    CHECK(winding(g * x) == winding(g) + winding(x));
    CHECK(winding(x.inverse() * g * x) == winding(g));
    // Invariant of the element, not the word.
    CHECK(winding(to_word(compute_normal_form(g))) == winding(g));
  }
}

TEST_CASE("named braids", "[artin]") {
  CHECK(named_braid(named::epsilon, 3) == bw(3, {{2, 1}, {1, 1}, {1, 1}}));
  for (int r = 2; r <= 5; ++r) {
    int const n  = r + 1;
    auto      d2 = named_braid(named::full_twist, n);
    CHECK(equal(named_braid(named::epsilon, n).power(r), d2));
    CHECK(equal(named_braid(named::delta, n).power(n), d2));
  }
  braid_word lhs = named_braid(named::epsilon1, 5).power(3);
  braid_word rhs(5);
  rhs.append_power(1, -2);
  rhs *= named_braid(named::full_twist, 5);
  CHECK(equal(lhs, rhs));
  CHECK_THROWS(named_braid(named::delta, 2));
}
