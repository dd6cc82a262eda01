#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "secrecy/errors.hpp"
#include "secrecy/region_general.hpp"
#include "secrecy/rng.hpp"

using namespace secrecy;

namespace {

BceChannel bsc_cascade() {
  auto y1 = DiscreteChannel::bsc(0.1);
  auto y2 = compose(y1, DiscreteChannel::bsc(0.05));
  auto z = compose(y2, DiscreteChannel::bsc(0.1));
  return BceChannel(y1, y2, z);
}

// ---------------------------------------------------------------------------
// Independent oracle for the constant-eavesdropper case. Everything below is
// written with raw nested loops and explicit probability tables on binary
// alphabets -- deliberately sharing no code with the library evaluator.
// With Z carrying no information the four bounds collapse to the familiar
// superposition-plus-binning form:
//   b0  = min(I(U;Y1), I(U;Y2))
//   b1  = I(V1;Y1|U) + b0
//   b2  = I(V2;Y2|U) + b0
//   b12 = I(V1;Y1|U) + I(V2;Y2|U) - I(V1;V2|U) + b0

struct OracleDec {
  std::array<double, 2> pu;
  // p(v1,v2|u), indexed [u][v1][v2]
  double pv[2][2][2];
  // p(x|v1,v2), indexed [v1][v2][x]
  double px[2][2][2];
};

double olog2(double x) { return std::log(x) / std::log(2.0); }

double oracle_mi_u_y(const OracleDec& d, const DiscreteChannel& ch) {
  double puy[2][2] = {};
  for (int u = 0; u < 2; ++u)
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            puy[u][y] += d.pu[u] * d.pv[u][v1][v2] * d.px[v1][v2][x] * ch(x, y);
  double pu[2] = {}, py[2] = {};
  for (int u = 0; u < 2; ++u)
    for (int y = 0; y < 2; ++y) {
      pu[u] += puy[u][y];
      py[y] += puy[u][y];
    }
  double mi = 0.0;
  for (int u = 0; u < 2; ++u)
    for (int y = 0; y < 2; ++y)
      if (puy[u][y] > 0.0) mi += puy[u][y] * olog2(puy[u][y] / (pu[u] * py[y]));
  return mi;
}

// I(V_a; Y | U) where a selects the satellite variable (0 -> v1, 1 -> v2)
double oracle_cmi_v_y(const OracleDec& d, const DiscreteChannel& ch, int which) {
  double mi = 0.0;
  for (int u = 0; u < 2; ++u) {
    double pvy[2][2] = {};
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y) {
            int v = which == 0 ? v1 : v2;
            pvy[v][y] += d.pv[u][v1][v2] * d.px[v1][v2][x] * ch(x, y);
          }
    double pv[2] = {}, py[2] = {};
    for (int v = 0; v < 2; ++v)
      for (int y = 0; y < 2; ++y) {
        pv[v] += pvy[v][y];
        py[y] += pvy[v][y];
      }
    double slice = 0.0;
    for (int v = 0; v < 2; ++v)
      for (int y = 0; y < 2; ++y)
        if (pvy[v][y] > 0.0) slice += pvy[v][y] * olog2(pvy[v][y] / (pv[v] * py[y]));
    mi += d.pu[u] * slice;
  }
  return mi;
}

double oracle_cmi_v1_v2(const OracleDec& d) {
  double mi = 0.0;
  for (int u = 0; u < 2; ++u) {
    double p1[2] = {}, p2[2] = {};
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2) {
        p1[v1] += d.pv[u][v1][v2];
        p2[v2] += d.pv[u][v1][v2];
      }
    double slice = 0.0;
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2)
        if (d.pv[u][v1][v2] > 0.0)
          slice += d.pv[u][v1][v2] * olog2(d.pv[u][v1][v2] / (p1[v1] * p2[v2]));
    mi += d.pu[u] * slice;
  }
  return mi;
}

InnerBoundDecomposition to_library(const OracleDec& d) {
  std::vector<double> kv, kx;
  for (int u = 0; u < 2; ++u)
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2) kv.push_back(d.pv[u][v1][v2]);
  for (int v1 = 0; v1 < 2; ++v1)
    for (int v2 = 0; v2 < 2; ++v2)
      for (int x = 0; x < 2; ++x) kx.push_back(d.px[v1][v2][x]);
  return InnerBoundDecomposition{Pmf({d.pu[0], d.pu[1]}), 2, 2,
                                 DiscreteChannel(2, 4, std::move(kv)),
                                 DiscreteChannel(4, 2, std::move(kx))};
}

OracleDec random_oracle_dec(Rng& rng) {
  OracleDec d;
  auto pu = rng.dirichlet(2);
  d.pu = {pu[0], pu[1]};
  for (int u = 0; u < 2; ++u) {
    auto row = rng.dirichlet(4);
    for (int v1 = 0; v1 < 2; ++v1)
      for (int v2 = 0; v2 < 2; ++v2) d.pv[u][v1][v2] = row[v1 * 2 + v2];
  }
  for (int v1 = 0; v1 < 2; ++v1)
    for (int v2 = 0; v2 < 2; ++v2) {
      auto row = rng.dirichlet(2);
      for (int x = 0; x < 2; ++x) d.px[v1][v2][x] = row[x];
    }
  return d;
}

}  // namespace

TEST_CASE("constant eavesdropper matches the independent superposition oracle") {
  auto y1 = DiscreteChannel::bsc(0.1);
  auto y2 = compose(y1, DiscreteChannel::bsc(0.05));
  auto z = DiscreteChannel::constant(2, Pmf::uniform(2));
  BceChannel bce(y1, y2, z);

  Rng rng(42);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    auto od = random_oracle_dec(rng);
    auto bounds = evaluate_inner_bound(bce, to_library(od));
    double b0 = std::min(oracle_mi_u_y(od, y1), oracle_mi_u_y(od, y2));
    double c1 = oracle_cmi_v_y(od, y1, 0);
    double c2 = oracle_cmi_v_y(od, y2, 1);
    double c12 = oracle_cmi_v1_v2(od);
    worst = std::max(worst, std::abs(bounds.raw0 - b0));
    worst = std::max(worst, std::abs(bounds.raw1 - (c1 + b0)));
    worst = std::max(worst, std::abs(bounds.raw2 - (c2 + b0)));
    worst = std::max(worst, std::abs(bounds.raw12 - (c1 + c2 - c12 + b0)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("bounds are clipped and raw values retained") {
  auto y1 = DiscreteChannel::bsc(0.1);
  // eavesdropper strictly better than both receivers
  BceChannel bce(compose(y1, DiscreteChannel::bsc(0.2)),
                 compose(y1, DiscreteChannel::bsc(0.3)), y1);
  Rng rng(5);
  auto dec = sample_decomposition(InnerRegionCaps{}, 2, rng);
  auto b = evaluate_inner_bound(bce, dec);
  CHECK(b.b0 >= 0.0);
  CHECK(b.b1 >= 0.0);
  CHECK(b.b2 >= 0.0);
  CHECK(b.b12 >= 0.0);
  CHECK(b.raw0 <= b.b0);
  CHECK(b.raw12 <= b.b12);
}

TEST_CASE("membership against the bound polytope") {
  InnerBounds b{0.2, 0.5, 0.4, 0.6, 0.2, 0.5, 0.4, 0.6};
  CHECK(membership(b, RateTriple{0.0, 0.0, 0.0}));
  CHECK(membership(b, RateTriple{0.125, 0.25, 0.125}));
  CHECK(!membership(b, RateTriple{0.25, 0.0, 0.0}));
  CHECK(!membership(b, RateTriple{0.2, 0.31, 0.2}));   // r0 + r1 > b1
  CHECK(!membership(b, RateTriple{0.0, 0.4, 0.3}));    // sum > b12
  CHECK(!membership(b, RateTriple{-0.1, 0.0, 0.0}));
}

TEST_CASE("bound vertices are members and extreme") {
  InnerBounds b{0.2, 0.5, 0.4, 0.6, 0.2, 0.5, 0.4, 0.6};
  auto verts = bound_vertices(b);
  REQUIRE(!verts.empty());
  bool hit_b1 = false, hit_b12 = false;
  for (const auto& v : verts) {
    CHECK(membership(b, v));
    if (std::abs(v.r0 + v.r1 - b.b1) < 1e-15) hit_b1 = true;
    if (std::abs(v.r0 + v.r1 + v.r2 - b.b12) < 1e-15) hit_b12 = true;
  }
  CHECK(hit_b1);
  CHECK(hit_b12);
}

TEST_CASE("sampled region triples and determinism") {
  auto bce = bsc_cascade();
  auto a = sample_inner_region(bce, InnerRegionCaps{}, 25, 9);
  auto b = sample_inner_region(bce, InnerRegionCaps{}, 25, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].r0 == b[i].r0);
    CHECK(a[i].r1 == b[i].r1);
    CHECK(a[i].r2 == b[i].r2);
    CHECK(a[i].r0 >= 0.0);
    CHECK(a[i].r1 >= 0.0);
    CHECK(a[i].r2 >= 0.0);
  }
  auto c = sample_inner_region(bce, InnerRegionCaps{}, 25, 10);
  bool differs = c.size() != a.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i)
    differs = c[i].r1 != a[i].r1;
  CHECK(differs);
}

TEST_CASE("alphabet caps guard") {
  auto bce = bsc_cascade();
  CHECK_THROWS_AS(sample_inner_region(bce, InnerRegionCaps{5, 4, 4}, 1, 0),
                  BudgetError);
  CHECK_THROWS_AS(sample_inner_region(bce, InnerRegionCaps{1, 2, 2}, 1, 0),
                  ValidationError);
}

TEST_CASE("decomposition validation") {
  auto bce = bsc_cascade();
  // |X| mismatch in the pair kernel
  InnerBoundDecomposition bad{Pmf::uniform(2), 2, 2,
                              DiscreteChannel(2, 4, {0.25, 0.25, 0.25, 0.25, 0.25,
                                                     0.25, 0.25, 0.25}),
                              DiscreteChannel(4, 3,
                                              std::vector<double>(12, 1.0 / 3.0))};
  CHECK_THROWS_AS(evaluate_inner_bound(bce, bad), ValidationError);
}

TEST_CASE("equal marginals with different joints give identical bounds") {
  auto bce_plain = bsc_cascade();
  // attach two different consistent joints
  std::vector<double> product(16), tilted(16);
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          double p = bce_plain.y1()(x, a) * bce_plain.y2()(x, b) * bce_plain.z()(x, c);
          int sa = a == 0 ? 1 : -1, sb = b == 0 ? 1 : -1, sc = c == 0 ? 1 : -1;
          product[((x * 2 + a) * 2 + b) * 2 + c] = p;
          tilted[((x * 2 + a) * 2 + b) * 2 + c] = p + 1e-3 * sa * sb * sc;
        }
  BceChannel with_product(bce_plain.y1(), bce_plain.y2(), bce_plain.z(), product);
  BceChannel with_tilt(bce_plain.y1(), bce_plain.y2(), bce_plain.z(), tilted);
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto dec = sample_decomposition(InnerRegionCaps{}, 2, rng);
    auto ba = evaluate_inner_bound(with_product, dec);
    auto bb = evaluate_inner_bound(with_tilt, dec);
    CHECK(ba.b0 == bb.b0);
    CHECK(ba.b1 == bb.b1);
    CHECK(ba.b2 == bb.b2);
    CHECK(ba.b12 == bb.b12);
  }
}
