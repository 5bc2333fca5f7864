#include <doctest.h>

#include "binoidal/dsl.hpp"
#include "binoidal/error.hpp"
#include "binoidal/presentation.hpp"
#include "binoidal/word.hpp"

#include <random>

using namespace binoidal;

TEST_CASE("word arithmetic and order") {
  const Word a({2, 0, 1}), b({1, 1, 0});
  CHECK((a + b) == Word({3, 1, 1}));
  CHECK(lcm(a, b) == Word({2, 1, 1}));
  CHECK(gcd(a, b) == Word({1, 0, 0}));
  CHECK(a.degree() == 3);
  CHECK(a.support() == 0b101);
  CHECK(Word({1, 0, 0}).divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK((a - Word({1, 0, 1})) == Word({1, 0, 0}));
  CHECK(a.scaled(3) == Word({6, 0, 3}));
  CHECK((a + Word::inf()).is_inf());
  CHECK_FALSE(Word::inf().divides(a));
  CHECK_FALSE(a.divides(Word::inf()));

  // grlex: degree first, then generator 0 largest; inf at the bottom.
  CHECK(grlex_compare(Word({0, 3}), Word({1, 0})) > 0);
  CHECK(grlex_compare(Word({2, 0}), Word({1, 1})) > 0);
  CHECK(grlex_compare(Word({1, 1}), Word({0, 2})) > 0);
  CHECK(grlex_compare(Word::inf(), Word({0, 0})) < 0);
  CHECK(grlex_compare(Word::inf(), Word::inf()) == 0);
}

TEST_CASE("word enumeration counts and descending order") {
  int count = 0;
  Word prev;
  bool descending = true;
  for_each_word_of_degree(3, 4, [&](const Word& w) {
    if (count++ && grlex_compare(prev, w) <= 0) descending = false;
    prev = w;
  });
  CHECK(count == 15);
  CHECK(descending);
  count = 0;
  for_each_word_up_to(2, 3, [&](const Word&) { ++count; });
  CHECK(count == 10);
}

TEST_CASE("make_presentation normalizes") {
  auto p = make_presentation({"x"}, {});
  CHECK(p.rank() == 1);
  CHECK(p.relations().empty());

  p = make_presentation({"x", "y"}, {{Word({1, 1}), Word::inf()}});
  CHECK(p.relations().size() == 1);

  p = make_presentation({"x"}, {{Word({1}), Word({1})}});
  CHECK(p.relations().empty());

  p = make_presentation({"x"}, {{Word::inf(), Word({2})}, {Word::inf(), Word::inf()}});
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].lhs == Word({2}));
  CHECK(p.relations()[0].rhs.is_inf());

  CHECK_THROWS_AS(make_presentation({"x", "x"}, {}), InvalidInput);
  CHECK_THROWS_AS(make_presentation({""}, {}), InvalidInput);
  CHECK_THROWS_AS(make_presentation({"inf"}, {}), InvalidInput);
  CHECK_THROWS_AS(make_presentation({"x"}, {{Word({1, 0}), Word({0, 1})}}), InvalidInput);
}

TEST_CASE("classify_relation") {
  auto p = "free(x,y)/(2x=x, x+y=inf, 3x=inf, 2x=3y, x+y=2x)"_pres;
  const auto& r = p.relations();
  CHECK(classify_relation(r[0]) == RelationClass{RelationKind::Binomial, Mixedness::Unmixed});
  CHECK(classify_relation(r[1]) == RelationClass{RelationKind::Monomial, Mixedness::Mixed});
  CHECK(classify_relation(r[2]) == RelationClass{RelationKind::Monomial, Mixedness::Unmixed});
  CHECK(classify_relation(r[3]) == RelationClass{RelationKind::Binomial, Mixedness::Mixed});
  CHECK(classify_relation(r[4]) == RelationClass{RelationKind::Binomial, Mixedness::Mixed});
}

TEST_CASE("parse presentations") {
  auto p = parse_presentation("free(x,y)/(x+y=inf, 2x=x+y)");
  CHECK(p.rank() == 2);
  CHECK(p.relations().size() == 2);

  p = parse_presentation("free(x)/(3x=0)");
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].lhs == Word({3}));
  CHECK(p.relations()[0].rhs == Word({0}));

  p = parse_presentation("  free ( a , b2 ) / ( a + a = b2 )  ");
  CHECK(p.relations()[0].lhs == Word({2, 0}));

  p = parse_presentation("free()");
  CHECK(p.rank() == 0);

  try {
    parse_presentation("free(x)/(x+ =y)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 11);  // the dangling +
  }
  CHECK_THROWS_AS(parse_presentation("free(x)/(y=x)"), Error);
  CHECK_THROWS_AS(parse_presentation("free(inf)"), Error);
  CHECK_THROWS_AS(parse_presentation("free(x)/(0x=x)"), Error);
  CHECK_THROWS_AS(parse_presentation("free(x) trailing"), Error);
}

TEST_CASE("parse words") {
  const auto p = "free(x,y)"_pres;
  CHECK(parse_word("2x+y", p) == Word({2, 1}));
  CHECK(parse_word("0", p) == Word({0, 0}));
  CHECK(parse_word("inf", p).is_inf());
  CHECK(parse_word("x+x", p) == Word({2, 0}));
  CHECK_THROWS_AS(parse_word("z", p), Error);
}

TEST_CASE("parse complexes") {
  const auto c = parse_complex("complex{1,2,3; {1,2},{2,3}}");
  CHECK(c.num_vertices() == 3);
  CHECK(c.facets().size() == 2);
  CHECK(c.dimension() == 1);
  CHECK(parse_complex(R"({"vertices":["1","2","3"],"facets":[["1","2"],["2","3"]]})") == c);
  CHECK(parse_complex(R"({"vertices":[1,2,3],"facets":[[1,2],[2,3]]})") == c);
  CHECK_THROWS_AS(parse_complex("complex{1,2; {1}}"), Error);
}

TEST_CASE("pretty print round trip, fixtures") {
  for (const char* text : {"free()", "free(x)", "free(x,y)/(x+y=inf, 2x=x+y)", "free(x)/(3x=0)",
                           "free(a,b,c)/(a+2b=inf, 3c=a, b=c)", "free(x,y)/(0=x+y)"}) {
    const auto p = parse_presentation(text);
    CHECK(parse_presentation(to_string(p)) == p);
  }
}

TEST_CASE("pretty print round trip, random") {
  std::mt19937 rng(7);
  const std::vector<std::string> pool{"x", "y", "z", "w"};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 4 + 1;
    std::vector<std::string> names(pool.begin(), pool.begin() + static_cast<long>(r));
    std::vector<std::pair<Word, Word>> rels;
    auto random_word = [&] {
      if (rng() % 6 == 0) return Word::inf();
      std::vector<Exponent> e(r);
      for (auto& x : e) x = rng() % 3;
      return Word(e);
    };
    for (unsigned k = rng() % 4; k-- > 0;) rels.emplace_back(random_word(), random_word());
    const auto p = make_presentation(names, rels);
    INFO(to_string(p));
    CHECK(parse_presentation(to_string(p)) == p);
  }
}
