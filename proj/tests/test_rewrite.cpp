#include <doctest.h>

#include "binoidal/dsl.hpp"
#include "binoidal/error.hpp"
#include "binoidal/grading.hpp"
#include "binoidal/rewrite.hpp"
#include "oracles.hpp"

#include <random>

using namespace binoidal;

namespace {

const char* const kFixtures[] = {
    "free(x,y)",
    "free(x,y)/(x+y=2x)",
    "free(x)/(3x=x)",
    "free(x,y)/(x+y=inf)",
    "free(x,y)/(2x=3y)",
    "free(x,y)/(2x=x+y, x+y=3y)",
    "free(x,y)/(x+2y=2x+y)",
    "free(x,y,z)/(y+x=y, z+x=z)",
    "free(x,y,z)/(x+y=x+y+z, 2z=inf)",
    "free(x,y)/(x+y=0)",
    "free(x)/(3x=0)",
    "free(x,y,z)/(2x=y+z, x+y=2z)",
    "free(x,y)/(2x+y=inf)",
    "free(x,y,z)/(x+y=z, 2z=inf)",
};

Presentation random_presentation(std::mt19937& rng) {
  const std::size_t r = rng() % 3 + 1;
  const std::vector<std::string> names{"x", "y", "z"};
  std::vector<std::pair<Word, Word>> rels;
  auto word = [&] {
    std::vector<Exponent> e(r, 0);
    const unsigned degree = rng() % 3 + 1;
    for (unsigned k = 0; k < degree; ++k) ++e[rng() % r];
    return Word(e);
  };
  for (unsigned k = rng() % 3 + 1; k-- > 0;) {
    Word lhs = word();
    Word rhs = rng() % 5 == 0 ? Word::inf() : (rng() % 7 == 0 ? Word::zero(r) : word());
    rels.emplace_back(lhs, rhs);
  }
  return make_presentation({names.begin(), names.begin() + static_cast<long>(r)}, rels);
}

void check_against_saturation(const Presentation& p) {
  const auto rs = RewriteSystem::complete(p);
  const oracle::Saturation sat(p, 14);
  std::vector<Word> window;
  for_each_word_up_to(p.rank(), 4, [&](const Word& w) { window.push_back(w); });
  INFO(to_string(p));
  for (const Word& u : window) {
    CHECK(rs.is_inf(u) == sat.is_inf(u));
    for (const Word& v : window) {
      if (rs.equal(u, v) != sat.equal(u, v)) {
        INFO(format_word(u, p.generators()) << " vs " << format_word(v, p.generators()));
        CHECK(rs.equal(u, v) == sat.equal(u, v));
      }
    }
  }
}

} // namespace

TEST_CASE("completion examples") {
  auto rs = RewriteSystem::complete("free(x,y)/(x+y=2x)"_pres);
  REQUIRE(rs.rules().size() == 1);
  CHECK(rs.rules()[0] == RewriteRule{Word({2, 0}), Word({1, 1})});
  CHECK(rs.normal_form(Word({3, 0})) == Word({1, 2}));
  CHECK(rs.normal_form(Word({2, 0})) == Word({1, 1}));
  CHECK(rs.equal(Word({3, 0}), Word({1, 2})));
  CHECK(rs.to_string() == "2x -> x+y\n");

  rs = RewriteSystem::complete("free(x)/(3x=x)"_pres);
  REQUIRE(rs.rules().size() == 1);
  CHECK(rs.rules()[0] == RewriteRule{Word({3}), Word({1})});
  for (Exponent k = 0; k < 20; ++k) CHECK(rs.normal_form(Word({k}))[0] <= 2);
  CHECK(rs.enumerate_elements(9) == std::vector<Word>{Word({0}), Word({1}), Word({2})});

  rs = RewriteSystem::complete("free(x,y)/(x+y=inf)"_pres);
  REQUIRE(rs.rules().size() == 1);
  CHECK(rs.rules()[0].rhs.is_inf());
  CHECK(rs.is_inf(Word({2, 3})));
  CHECK(rs.monomial_only());
  CHECK(rs.enumerate_elements(2) ==
        std::vector<Word>{Word({0, 0}), Word({0, 1}), Word({1, 0}), Word({0, 2}), Word({2, 0})});

  rs = RewriteSystem::complete("free(x)/(2x=inf)"_pres);
  CHECK(rs.is_inf(Word({5})));

  rs = RewriteSystem::complete("free(x,y)"_pres);
  CHECK_FALSE(rs.equal(Word({1, 0}), Word({0, 1})));
  CHECK(rs.normal_form(Word({0, 0})) == Word({0, 0}));
  CHECK(rs.enumerate_elements(3).size() == 10);
  CHECK(RewriteSystem::complete("free(x)"_pres).enumerate_elements(3).size() == 4);

  rs = RewriteSystem::complete("free(x,y)/(x+y=0)"_pres);
  CHECK(rs.equal(Word({3, 3}), Word({0, 0})));
  CHECK(rs.normal_form(Word::inf()).is_inf());
}

TEST_CASE("normal form is idempotent and checks rank") {
  const auto rs = RewriteSystem::complete("free(x,y,z)/(2x=y+z, x+y=2z)"_pres);
  for_each_word_up_to(3, 5, [&](const Word& w) { CHECK(rs.normal_form(rs.normal_form(w)) == rs.normal_form(w)); });
  CHECK_THROWS_AS(rs.normal_form(Word({1, 0})), InvalidInput);
}

TEST_CASE("reduced system shape") {
  for (const char* text : kFixtures) {
    const auto rs = RewriteSystem::complete(parse_presentation(text));
    INFO(text);
    for (const auto& rule : rs.rules()) {
      CHECK(grlex_compare(rule.lhs, rule.rhs) > 0);
      CHECK(rs.normal_form(rule.rhs) == rule.rhs);
      for (const auto& other : rs.rules())
        if (!(other == rule)) CHECK_FALSE(other.lhs.divides(rule.lhs));
    }
    CHECK(std::is_sorted(rs.rules().begin(), rs.rules().end(),
                         [](const RewriteRule& a, const RewriteRule& b) { return grlex_compare(a.lhs, b.lhs) < 0; }));
  }
}

TEST_CASE("confluence at every overlap") {
  for (const char* text : kFixtures) {
    const auto rs = RewriteSystem::complete(parse_presentation(text));
    INFO(text);
    for (const auto& a : rs.rules())
      for (const auto& b : rs.rules()) {
        const Word top = lcm(a.lhs, b.lhs);
        const Word via_a = a.rhs.is_inf() ? Word::inf() : top - a.lhs + a.rhs;
        const Word via_b = b.rhs.is_inf() ? Word::inf() : top - b.lhs + b.rhs;
        CHECK(rs.normal_form(via_a) == rs.normal_form(via_b));
      }
  }
}

TEST_CASE("congruence compatibility up to degree 4") {
  for (const char* text : kFixtures) {
    const auto p = parse_presentation(text);
    const auto rs = RewriteSystem::complete(p);
    std::vector<Word> window;
    for_each_word_up_to(p.rank(), 4, [&](const Word& w) { window.push_back(w); });
    INFO(text);
    for (const Word& u : window)
      for (const Word& v : window)
        CHECK(rs.normal_form(u + v) == rs.normal_form(rs.normal_form(u) + rs.normal_form(v)));
  }
}

TEST_CASE("word problem agrees with bounded saturation on fixtures") {
  for (const char* text : kFixtures) check_against_saturation(parse_presentation(text));
}

TEST_CASE("word problem agrees with bounded saturation on random presentations") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 60; ++trial) check_against_saturation(random_presentation(rng));
}

TEST_CASE("monomial-only systems have singleton classes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const auto p = random_presentation(rng);
    const auto rs = RewriteSystem::complete(p);
    const oracle::Saturation sat(p, 10);
    bool singletons = true;
    for_each_word_up_to(p.rank(), 4, [&](const Word& w) {
      if (!sat.is_inf(w) && sat.class_of(w).size() != 1) singletons = false;
    });
    INFO(to_string(p));
    CHECK(rs.monomial_only() == singletons);
  }
}

TEST_CASE("completion budget is a hard error") {
  const auto p = "free(x,y,z)/(2x=y+z, 2y=x+z, 2z=x+y)"_pres;
  CHECK_THROWS_AS(RewriteSystem::complete(p, 1), BudgetExceeded);
  CHECK_NOTHROW(RewriteSystem::complete(p));
}

TEST_CASE("order function and Hilbert-Samuel values") {
  auto rs = RewriteSystem::complete("free(x,y)"_pres);
  CHECK(order_delta(rs, {1, 1}, Word({1, 2})) == 3);
  CHECK(order_delta(rs, {1, 1}, Word({0, 0})) == 0);
  rs = RewriteSystem::complete("free(x,y)/(2x=3y)"_pres);
  CHECK(order_delta(rs, {3, 2}, Word({2, 0})) == 3);
  CHECK_THROWS_AS(order_delta(rs, {1, 1}, Word({2, 0})), PreconditionError);
  CHECK_THROWS_AS(order_delta(RewriteSystem::complete("free(x)/(2x=inf)"_pres), {1}, Word({2})), PreconditionError);
  CHECK_THROWS_AS(order_delta(RewriteSystem::complete("free(x,y)/(x+y=0)"_pres), {1, 1}, Word({1, 0})),
                  PreconditionError);

  CHECK(hilbert_samuel("free(x,y)"_pres, 3) == 6);
  CHECK(hilbert_samuel("free(x)"_pres, 5) == 5);
  CHECK(hilbert_samuel("free(x,y)/(x+y=inf)"_pres, 2) == 3);
  CHECK(hilbert_samuel("free(x,y)/(2x=3y)"_pres, 1) == 1);
  CHECK_THROWS_AS(hilbert_samuel("free(x)/(3x=x)"_pres, 3), PreconditionError);
  CHECK_THROWS_AS(hilbert_samuel("free(x,y)/(x+y=0)"_pres, 3), PreconditionError);
}

TEST_CASE("Hilbert-Samuel on free binoids is a binomial coefficient") {
  const char* names[] = {"free(x)", "free(x,y)", "free(x,y,z)"};
  for (int d = 1; d <= 3; ++d) {
    const auto p = parse_presentation(names[d - 1]);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      // C(n-1+d, d)
      std::uint64_t expect = 1;
      for (int i = 1; i <= d; ++i) expect = expect * (n - 1 + static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i);
      CHECK(hilbert_samuel(p, n) == expect);
    }
  }
}

TEST_CASE("Hilbert-Samuel counts window classes by hand on a graded quotient") {
  // 2x = 3y with weights (3,2): classes of order < n are the words of
  // degree < n modulo 2x ~ 3y, minus those whose class reaches degree n.
  const auto p = "free(x,y)/(2x=3y)"_pres;
  const auto rs = RewriteSystem::complete(p);
  const oracle::Saturation sat(p, 12);
  for (std::uint64_t n = 1; n <= 5; ++n) {
    std::vector<Word> reps;
    for_each_word_up_to(2, n - 1, [&](const Word& w) {
      for (const Word& v : sat.class_of(w))
        if (v.degree() >= n) return;
      for (const Word& r : reps)
        if (sat.equal(r, w)) return;
      reps.push_back(w);
    });
    CHECK(hilbert_samuel(rs, n) == reps.size());
  }
}
