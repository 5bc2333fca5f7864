#include <doctest.h>

#include "binoidal/algebra.hpp"
#include "binoidal/dsl.hpp"
#include "binoidal/kernels.hpp"

#include <cstdlib>
#include <random>

using namespace binoidal;

namespace {

Presentation random_presentation(std::mt19937& rng, std::size_t r) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::pair<Word, Word>> rels;
  for (unsigned k = rng() % 3 + 1; k-- > 0;) {
    std::vector<Exponent> a(r, 0), b(r, 0);
    a[rng() % r] += rng() % 3 + 1;
    if (rng() % 2) a[rng() % r] += 1;
    b[rng() % r] += rng() % 3;
    const unsigned kind = rng() % 5;
    rels.emplace_back(Word(a), kind == 0 ? Word::inf() : Word(b));
  }
  return make_presentation(names, rels);
}

} // namespace

TEST_CASE("admissibility rows") {
  const auto rows = kernels::admissibility_rows("free(x,y,z)/(x+y=inf, 2z=x)"_pres);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].lhs == 0b011);
  CHECK(rows[0].rhs_inf);
  CHECK(rows[1].lhs == 0b100);
  CHECK(rows[1].rhs == 0b001);
  CHECK(kernels::admissible(rows, 0b101));
  CHECK_FALSE(kernels::admissible(rows, 0b100));
  CHECK_FALSE(kernels::admissible(rows, 0));
}

TEST_CASE("subset scans agree and are ascending") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_presentation(rng, 6 + rng() % 10);
    const auto rows = kernels::admissibility_rows(p);
    const auto serial = kernels::scan_admissible_serial(rows, p.rank());
    CHECK(std::is_sorted(serial.begin(), serial.end()));
    for (int threads : {1, 2, 4, 7}) CHECK(kernels::scan_admissible_parallel(rows, p.rank(), threads) == serial);
  }
}

TEST_CASE("map counts agree across kernels") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_presentation(rng, 1 + rng() % 4);
    for (std::uint64_t q : {2, 3, 5, 7}) {
      const auto serial = kernels::count_maps_serial(p, q);
      INFO(to_string(p) << " q=" << q);
      for (int threads : {2, 3}) CHECK(kernels::count_maps_parallel(p, q, threads) == serial);
    }
  }
}

TEST_CASE("map count examples") {
  CHECK(kernels::count_maps_serial("free(x,y)/(x+y=inf)"_pres, 3) == 5);
  CHECK(kernels::count_maps_serial("free(x)/(8x=0)"_pres, 17) == 8);
  CHECK(kernels::count_maps_serial("free(x,y)"_pres, 5) == 25);
  CHECK(kernels::count_maps_serial("free()"_pres, 5) == 1);
  CHECK(kernels::count_maps_serial("free(x)/(0=inf)"_pres, 5) == 0);
}

TEST_CASE("thread override") {
  kernels::set_default_threads(3);
  CHECK(kernels::default_threads() == 3);
  kernels::set_default_threads(0);
  CHECK(kernels::default_threads() >= 1);
}
