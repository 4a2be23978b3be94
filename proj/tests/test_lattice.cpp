#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace garside;
using support::oracle_join;
using support::oracle_meet;

namespace {

template <GarsideStructure G>
typename G::Simple simple(const G& g, const char* word) {
  return parse_simple(g, word);
}

template <GarsideStructure G>
void check_lattice_against_oracles(const G& g) {
  const auto& all = g.simples();
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto m = g.meet(a, b);
      const auto j = g.join(a, b);
      CHECK(m == oracle_meet(g, a, b));
      CHECK(j == oracle_join(g, a, b));
      CHECK(m == generic_meet(g, a, b));
      CHECK(j == generic_join(g, a, b));
      CHECK(g.meet(a, b) == g.meet(b, a));
      CHECK(g.join(a, b) == g.join(b, a));
      CHECK(g.meet(a, g.join(a, b)) == a);
      CHECK(g.join(a, g.meet(a, b)) == a);
    }
  }
}

template <GarsideStructure G>
void check_complements_and_quotients(const G& g) {
  const auto delta = g.delta();
  for (const auto& s : g.simples()) {
    CHECK(g.product(s, g.right_complement(s)) == delta);
    CHECK(g.product(g.left_complement(s), s) == delta);
    CHECK(g.tau(s, g.tau_order()) == s);
    CHECK(g.length(s) + g.length(g.right_complement(s)) == g.max_simple_length());
    CHECK(simple_word(g, s).size() == static_cast<std::size_t>(g.length(s)));
    CHECK(word_to_simple(g, simple_word(g, s)) == s);
    for (const auto& t : g.simples()) {
      if (g.left_divides(s, t)) CHECK(g.product(s, g.left_quotient(s, t)) == t);
      CHECK(product_is_simple(g, s, t) == g.left_divides(t, g.right_complement(s)));
    }
    for (int i = 0; i < g.atom_count(); ++i) {
      CHECK(g.atom_divides(i, s) == g.left_divides(g.atom(i), s));
    }
  }
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("simple element counts") {
    CHECK(ArtinStructure(3).simples().size() == 6);
    CHECK(ArtinStructure(4).simples().size() == 24);
    CHECK(ArtinStructure(5).simples().size() == 120);
    CHECK(BklStructure(3).simples().size() == 5);
    CHECK(BklStructure(4).simples().size() == 14);
    CHECK(BklStructure(5).simples().size() == 42);
    CHECK(BklStructure(6).simples().size() == 132);
  }

  TEST_CASE("enumeration agrees with divisor closure of Delta") {
    const ArtinStructure b4(4);
    const BklStructure k5(5);
    CHECK(support::simple_words(b4, b4.simples()) == support::simple_words(b4, simples_by_closure(b4)));
    CHECK(support::simple_words(k5, k5.simples()) == support::simple_words(k5, simples_by_closure(k5)));
  }

  TEST_CASE("Artin divisibility is inversion-set inclusion") {
    const ArtinStructure b4(4);
    for (const auto& a : b4.simples()) {
      for (const auto& b : b4.simples()) {
        CHECK(b4.left_divides(a, b) == support::oracle_artin_divides(a, b));
      }
    }
  }

  TEST_CASE("Artin meet and join match exhaustive search") {
    check_lattice_against_oracles(ArtinStructure(3));
    check_lattice_against_oracles(ArtinStructure(4));
  }

  TEST_CASE("BKL meet and join match exhaustive search") {
    check_lattice_against_oracles(BklStructure(3));
    check_lattice_against_oracles(BklStructure(4));
    check_lattice_against_oracles(BklStructure(5));
  }

  TEST_CASE("associativity on all triples in B4") {
    const ArtinStructure g(4);
    for (const auto& a : g.simples()) {
      for (const auto& b : g.simples()) {
        for (const auto& c : g.simples()) {
          CHECK(g.meet(g.meet(a, b), c) == g.meet(a, g.meet(b, c)));
          CHECK(g.join(g.join(a, b), c) == g.join(a, g.join(b, c)));
        }
      }
    }
  }

  TEST_CASE("complements, quotients and words") {
    check_complements_and_quotients(ArtinStructure(3));
    check_complements_and_quotients(ArtinStructure(4));
    check_complements_and_quotients(BklStructure(4));
    check_complements_and_quotients(BklStructure(5));
  }

  TEST_CASE("Hasse diagram of B4 simples") {
    // Covering relations s ≺ s·σ_i: the permutohedron of S4, 3-regular with 36 edges.
    const ArtinStructure g(4);
    int edges = 0;
    std::multiset<int> degrees;
    for (const auto& s : g.simples()) {
      int degree = 0;
      for (const auto& t : g.simples()) {
        if (g.length(t) == g.length(s) + 1 && g.left_divides(s, t)) ++edges;
        if (std::abs(g.length(t) - g.length(s)) == 1 &&
            (g.left_divides(s, t) || g.left_divides(t, s))) {
          ++degree;
        }
      }
      degrees.insert(degree);
    }
    CHECK(edges == 36);
    CHECK(degrees.size() == 24);
    CHECK(degrees.count(3) == 24);
  }

  TEST_CASE("Artin examples") {
    const ArtinStructure b3(3);
    const ArtinStructure b4(4);
    CHECK(b3.join(b3.atom(0), b3.atom(1)) == b3.delta());
    CHECK(b4.join(b4.atom(0), b4.atom(2)) == simple(b4, "s1 s3"));
    CHECK(b4.meet(simple(b4, "s1 s2"), simple(b4, "s1 s3")) == b4.atom(0));
    CHECK(b4.meet(b4.atom(0), b4.atom(1)) == b4.identity());
    for (const auto& s : b4.simples()) {
      CHECK(b4.join(s, b4.identity()) == s);
      CHECK(b4.meet(s, s) == s);
    }
    CHECK(b3.right_complement(b3.identity()) == b3.delta());
    CHECK(b3.right_complement(b3.delta()) == b3.identity());
    CHECK(b3.right_complement(b3.atom(0)) == simple(b3, "s2 s1"));
    CHECK(b4.tau(b4.delta()) == b4.delta());
    for (int n = 3; n <= 6; ++n) {
      const ArtinStructure g(n);
      for (int i = 0; i < n - 1; ++i) {
        CHECK(g.tau(g.atom(i)) == g.atom(n - 2 - i));
        CHECK(Element<ArtinStructure>::from_simple(g, g.tau(g.atom(i))) ==
              conjugate(Element<ArtinStructure>::from_simple(g, g.atom(i)),
                        Element<ArtinStructure>::delta_power(g, 1)));
      }
    }
    CHECK(b4.atom_divides(0, b4.delta()));
    CHECK_FALSE(b4.atom_divides(0, b4.identity()));
    const auto s1s2 = simple(b4, "s1 s2");
    CHECK_FALSE(b4.atom_divides(1, s1s2));
    CHECK(b4.atom_divides(0, s1s2));
  }

  TEST_CASE("Artin words") {
    const ArtinStructure b4(4);
    CHECK(simple_word(b4, b4.delta()).size() == 6);
    CHECK(simple_word(b4, b4.delta()) == std::vector<int>{0, 1, 0, 2, 1, 0});
    CHECK_THROWS_AS(word_to_simple(b4, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(parse_simple(b4, "s1 s1"), std::invalid_argument);
    CHECK_THROWS_AS(ArtinStructure(1), std::invalid_argument);
    CHECK_THROWS_AS(ArtinStructure(17), std::invalid_argument);
  }

  TEST_CASE("BKL examples") {
    const BklStructure k3(3);
    CHECK(k3.band(2, 1).blocks() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(k3.product(k3.band(3, 2), k3.band(2, 1)) == k3.delta());
    CHECK(k3.delta().blocks() == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(k3.join(k3.band(2, 1), k3.band(3, 2)) == k3.delta());
    CHECK(k3.meet(k3.band(3, 1), k3.band(2, 1)) == k3.identity());
    for (int n = 2; n <= 8; ++n) {
      const BklStructure g(n);
      CHECK(g.atom_count() == n * (n - 1) / 2);
      CHECK(g.max_simple_length() == n - 1);
      CHECK(g.length(g.delta()) == n - 1);
    }
    CHECK_THROWS(NonCrossingSimple::from_blocks(4, {{1, 3}, {2, 4}}));
    CHECK_THROWS(k3.band(2, 2));
  }

  TEST_CASE("BKL tau rotates blocks") {
    const BklStructure k5(5);
    CHECK(k5.tau(k5.band(2, 1)) == k5.band(3, 2));
    CHECK(k5.tau(k5.band(5, 1)) == k5.band(2, 1));
    for (const auto& s : k5.simples()) {
      const auto e = Element<BklStructure>::from_simple(k5, s);
      CHECK(Element<BklStructure>::from_simple(k5, k5.tau(s)) ==
            conjugate(e, Element<BklStructure>::delta_power(k5, 1)));
    }
  }
}
