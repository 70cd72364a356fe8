#include "doctest.h"

#include "slab/field.hpp"
#include "slab/field_io.hpp"
#include "slab/generators.hpp"
#include "slab/rng.hpp"

#include <cmath>
#include <limits>

using namespace slab;

namespace {

Grid small_grid(int nx = 32, int nt = 8) {
  return Grid::make(2, {2 * pi, pi, 0}, {nx, nx, 0}, TimeWindow{0.0, 1.0, nt});
}

Field random_whole(const Grid& g, Rank rank, int nt, uint64_t seed) {
  Rng rng(seed);
  Field f(g, rank, Domain::whole, nt);
  for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] = rng.cnormal();
  return f;
}

double max_diff(const Field& a, const Field& b) {
  double err = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    err = std::max(err, std::abs(a.data()[i] - b.data()[i]));
  return err;
}

}  // namespace

TEST_CASE("fft round trip identity") {
  Grid g = small_grid();
  Field f = random_whole(g, Rank::vector, 2, 101);
  Field f2 = to_physical(to_spectral(f));
  REQUIRE(max_diff(f, f2) < 1e-12);
}

TEST_CASE("fft parseval") {
  Grid g = small_grid();
  Field f = random_whole(g, Rank::scalar, 1, 102);
  double phys = 0;
  for (std::size_t i = 0; i < f.size(); ++i) phys += std::norm(f.data()[i]);
  Field fs = to_spectral(f);
  double spec = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) spec += std::norm(fs.data()[i]);
  REQUIRE(std::abs(phys - spec) < 1e-10 * std::max(1.0, phys));
}

TEST_CASE("time transform round trip") {
  Grid g = small_grid(16, 8);
  Field f = random_whole(g, Rank::scalar, g.time.nt, 103);
  Field f2 = time_inverse(time_forward(f));
  REQUIRE(max_diff(f, f2) < 1e-12);
}

TEST_CASE("spectral derivative matches analytic on trig polynomial") {
  Grid g = small_grid(32, 1);
  Field f(g, Rank::scalar, Domain::whole);
  // u = sin(3x) cos(2y) on the doubled torus; y period 2*pi after doubling
  for_each_index(f.extents(), [&](std::size_t flat, const int* ix) {
    double x = g.spacing(0) * ix[0];
    double y = g.spacing(1) * ix[1];
    f.data()[flat] = std::sin(3 * x) * std::cos(2 * y);
  });
  Field fx = derivative(f, 0);
  Field fy = derivative(f, 1);
  double ex = 0, ey = 0;
  for_each_index(f.extents(), [&](std::size_t flat, const int* ix) {
    double x = g.spacing(0) * ix[0];
    double y = g.spacing(1) * ix[1];
    ex = std::max(ex, std::abs(fx.data()[flat] - cplx(3 * std::cos(3 * x) * std::cos(2 * y))));
    ey = std::max(ey, std::abs(fy.data()[flat] - cplx(-2 * std::sin(3 * x) * std::sin(2 * y))));
  });
  REQUIRE(ex < 1e-11);
  REQUIRE(ey < 1e-11);
}

TEST_CASE("derivatives commute spectrally") {
  Grid g = small_grid(16, 1);
  Field f = to_spectral(random_whole(g, Rank::scalar, 1, 105));
  Field fxy = derivative(derivative(f, 0), 1);
  Field fyx = derivative(derivative(f, 1), 0);
  REQUIRE(max_diff(fxy, fyx) < 1e-10);
}

TEST_CASE("extension parities and restriction round trip") {
  Grid g = small_grid(16, 1);
  Field h(g, Rank::scalar, Domain::half);
  Rng rng(106);
  for (std::size_t i = 0; i < h.size(); ++i) h.data()[i] = rng.cnormal();

  SUBCASE("even is an exact reflection symmetry") {
    Field w = extend(h, ExtensionPolicy::uniform(Parity::even));
    REQUIRE(reflection_defect(w, Parity::even) < 1e-14);
    Field back = restrict_whole(w);
    REQUIRE(max_diff(h, back) < 1e-14);
  }
  SUBCASE("odd zeroes the walls") {
    Field w = extend(h, ExtensionPolicy::uniform(Parity::odd));
    REQUIRE(reflection_defect(w, Parity::odd) < 1e-14);
    int nn = g.normal_axis();
    int N = g.npts[nn];
    double wall = 0;
    for_each_index(w.extents(), [&](std::size_t flat, const int* ix) {
      if (ix[nn] == 0 || ix[nn] == N) wall = std::max(wall, std::abs(w.data()[flat]));
    });
    REQUIRE(wall == 0.0);
  }
  SUBCASE("zero extension restricts back to the identity") {
    Field w = extend(h, ExtensionPolicy::uniform(Parity::zero));
    Field back = restrict_whole(w);
    REQUIRE(max_diff(h, back) < 1e-14);
  }
}

TEST_CASE("newtonian potential inverts minus laplacian") {
  Grid g = small_grid(32, 1);
  Field f = to_spectral(random_whole(g, Rank::scalar, 1, 107));
  int zero_ix[2] = {0, 0};
  f.at(0, 0, f.flat_index(zero_ix)) = 0.0;
  f = to_physical(f);
  double mass = 0;
  Field phi = newtonian_potential(f, &mass);
  REQUIRE(std::abs(mass) < 1e-12);
  Field lap = laplacian(phi);
  Field sum = lap + f;
  REQUIRE(max_abs(sum) < 1e-9);
}

TEST_CASE("newtonian potential reports dropped mean") {
  Grid g = small_grid(16, 1);
  Field f(g, Rank::scalar, Domain::whole);
  for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] = 3.0;
  double mass = 0;
  Field phi = newtonian_potential(f, &mass);
  REQUIRE(std::abs(mass - 3.0) > 1e-6);  // nonzero mean is reported
  REQUIRE(max_abs(phi) < 1e-12);         // pure mean inverts to zero
}

TEST_CASE("fourth order time derivative") {
  Grid g = small_grid(8, 32);
  Field f(g, Rank::scalar, Domain::whole, g.time.nt);
  std::size_t sz = f.spatial_size();
  for (int m = 0; m < g.time.nt; ++m) {
    double t = g.time.t(m);
    cplx v = std::exp(cplx(0, 2 * pi * t)) * std::cos(3 * t);
    for (std::size_t i = 0; i < sz; ++i) f.at(m, 0, i) = v;
  }
  Field ft = dt4(f);
  double err = 0;
  for (int m = 0; m < g.time.nt; ++m) {
    double t = g.time.t(m);
    cplx v = std::exp(cplx(0, 2 * pi * t)) *
             (cplx(0, 2 * pi) * std::cos(3 * t) - 3.0 * std::sin(3 * t));
    err = std::max(err, std::abs(ft.at(m, 0, 0) - v));
  }
  REQUIRE(err < 5e-5);
}

TEST_CASE("cumulative time integral of a constant") {
  Grid g = small_grid(8, 16);
  Field f(g, Rank::scalar, Domain::whole, g.time.nt);
  for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] = 2.0;
  Field F = time_integral(f);
  for (int m = 0; m < g.time.nt; ++m) {
    double t = g.time.t(m);
    REQUIRE(std::abs(F.at(m, 0, 0) - cplx(2.0 * t)) < 1e-12);
  }
}

TEST_CASE("divergence free projection") {
  Grid g = small_grid(32, 1);
  Field f = random_whole(g, Rank::vector, 1, 108);
  Field pf = project_divergence_free(f);
  Field div = divergence(pf);
  REQUIRE(max_abs(div) < 1e-11);
  Field pf2 = project_divergence_free(pf);
  REQUIRE(max_diff(pf, pf2) < 1e-11);
}

TEST_CASE("lp norms on constant field") {
  Grid g = small_grid(16, 1);
  Field f(g, Rank::scalar, Domain::whole);
  for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] = 2.0;
  double vol = 2 * pi * 2 * pi;  // normal axis period doubled
  REQUIRE(lp_norm(f, 2.0) == doctest::Approx(2.0 * std::sqrt(vol)).epsilon(1e-12));
  REQUIRE(lp_norm(f, 1.0) == doctest::Approx(2.0 * vol).epsilon(1e-12));
  REQUIRE(lp_norm(f, std::numeric_limits<double>::infinity()) == doctest::Approx(2.0));
}

TEST_CASE("half domain lp matches half the doubled torus for even data") {
  Grid g = small_grid(16, 1);
  Field h(g, Rank::scalar, Domain::half);
  Rng rng(109);
  for (std::size_t i = 0; i < h.size(); ++i) h.data()[i] = rng.uniform(0.5, 1.5);
  Field w = extend(h, ExtensionPolicy::uniform(Parity::even));
  double half2 = lp_norm(h, 2.0);
  double whole2 = lp_norm(w, 2.0);
  REQUIRE(whole2 == doctest::Approx(std::sqrt(2.0) * half2).epsilon(1e-10));
}

TEST_CASE("band limited generator is real normalized and in band") {
  Grid g = small_grid(32, 1);
  Rng rng(110);
  Field f = random_band_limited(g, Rank::vector, Domain::whole, 1, 3, rng, 1.0);
  REQUIRE(max_imag(f) < 1e-12);
  REQUIRE(max_abs(f) == doctest::Approx(1.0).epsilon(1e-9));
  // spectrum vanishes outside |xi| in (2^0, 2^4)
  Field fs = to_spectral(f);
  auto tables = freq_tables(fs);
  double out_mass = 0;
  for (int c = 0; c < fs.ncomp(); ++c) {
    for_each_index(fs.extents(), [&](std::size_t flat, const int* ix) {
      double r2 = 0;
      for (int a = 0; a < fs.nspatial(); ++a) r2 += tables[a][ix[a]] * tables[a][ix[a]];
      double r = std::sqrt(r2);
      if (r > 1.0 && r < 16.0) return;
      out_mass += std::norm(fs.at(0, c, flat));
    });
  }
  REQUIRE(out_mass < 1e-20);
}

TEST_CASE("causal bump vanishes outside its support") {
  TimeWindow tw{-0.25, 1.0, 20};
  auto bump = causal_bump(tw, 0.1, 0.55);
  REQUIRE((int)bump.size() == tw.nt);
  double peak = 0;
  for (int m = 0; m < tw.nt; ++m) {
    double t = tw.t(m);
    if (t <= 0.1 || t >= 0.55) REQUIRE(bump[m] == 0.0);
    peak = std::max(peak, bump[m]);
  }
  REQUIRE(peak > 0.9);
  REQUIRE(peak <= 1.0 + 1e-12);
}

TEST_CASE("snapshot io round trip") {
  Grid g = small_grid(16, 3);
  Field f = random_whole(g, Rank::vector, 3, 111);
  std::string path = "/tmp/slab_test_snapshot.fld";
  write_snapshot(path, f);
  Field f2 = read_snapshot(path);
  REQUIRE(f2.rank() == f.rank());
  REQUIRE(f2.domain() == f.domain());
  REQUIRE(f2.grid().npts == f.grid().npts);
  REQUIRE(f2.nt() == f.nt());
  REQUIRE(max_diff(f, f2) < 1e-5);  // float32 storage
}
