#include "doctest.h"

#include "slab/rng.hpp"
#include "slab/config.hpp"

#include <cmath>
#include <complex>

using namespace slab;

TEST_CASE("rng determinism and forks") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());

  Rng c(42), c2(42);
  Rng f1 = c.fork(1);
  Rng f2 = c.fork(2);
  Rng f1b = c2.fork(1);
  REQUIRE(f1.next_u64() == f1b.next_u64());
  REQUIRE(f1.next_u64() != f2.next_u64());
}

TEST_CASE("rng uniform range and normal moments") {
  Rng r(7);
  double lo = 1e9, hi = -1e9;
  for (int i = 0; i < 20000; ++i) {
    double u = r.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  REQUIRE(lo < 0.01);
  REQUIRE(hi > 0.99);

  double s = 0, s2 = 0;
  int n = 200000;
  for (int i = 0; i < n; ++i) {
    double g = r.normal();
    s += g;
    s2 += g * g;
  }
  REQUIRE(std::abs(s / n) < 0.02);
  REQUIRE(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("rng complex normal has unit total variance") {
  Rng r(11);
  double s2 = 0;
  int n = 100000;
  for (int i = 0; i < n; ++i) s2 += std::norm(r.cnormal());
  REQUIRE(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("rng log uniform stays in range") {
  Rng r(13);
  for (int i = 0; i < 1000; ++i) {
    double v = r.log_uniform(0.5, 2.0);
    REQUIRE(v >= 0.5);
    REQUIRE(v <= 2.0);
  }
}

TEST_CASE("config parse sections and types") {
  Config c = Config::parse_text(
      "# comment\n"
      "top = 3\n"
      "[grid]\n"
      "n = 2\n"
      "box = 6.2831853, 3.1415926\n"
      "flag = true\n");
  REQUIRE(c.require_int("top") == 3);
  REQUIRE(c.require_int("grid.n") == 2);
  REQUIRE(c.get_bool("grid.flag", false));
  auto box = c.get_double_list("grid.box", {});
  REQUIRE(box.size() == 2);
  REQUIRE(box[0] == doctest::Approx(6.2831853));
}

TEST_CASE("config hash stable under key order") {
  Config a = Config::parse_text("x = 1\ny = 2\n");
  Config b = Config::parse_text("y = 2\nx = 1\n");
  REQUIRE(a.hash() == b.hash());
  Config c = Config::parse_text("x = 1\ny = 3\n");
  REQUIRE(a.hash() != c.hash());
}
