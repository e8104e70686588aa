#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "testutil.hpp"
#include "vand/geometry.hpp"
#include "vand/rng.hpp"

using namespace vand;

namespace {
const double inf = std::numeric_limits<double>::infinity();

// Independent oracle for the wrap distance: enumerate all 3^d integer shifts.
double wrap_oracle(const double* s, const double* t, int d) {
  double best = inf;
  int total = 1;
  for (int l = 0; l < d; ++l) total *= 3;
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx;
    double m = 0;
    for (int l = 0; l < d; ++l) {
      int r = rem % 3 - 1;
      rem /= 3;
      m = std::max(m, std::fabs(s[l] - t[l] + (double)r));
    }
    best = std::min(best, m);
  }
  return best;
}
}  // namespace

TEST_CASE("wrap distance basics") {
  double a0[] = {0.0}, a1[] = {0.0};
  CHECK(wrap_distance(a0, a1, 1) == 0.0);
  double b0[] = {0.9}, b1[] = {0.1};
  CHECK(wrap_distance(b0, b1, 1) == doctest::Approx(0.2).epsilon(1e-14));
  double c0[] = {0.95, 0.10}, c1[] = {0.05, 0.40};
  CHECK(wrap_distance(c0, c1, 2) == doctest::Approx(0.30).epsilon(1e-14));
}

TEST_CASE("wrap distance matches the 9-shift enumeration oracle") {
  SplitMix64 rng(11);
  for (int d = 1; d <= 3; ++d)
    for (int it = 0; it < 2000; ++it) {
      std::vector<double> s(d), t(d);
      for (int l = 0; l < d; ++l) {
        s[l] = rng.uniform();
        t[l] = rng.uniform();
      }
      double got = wrap_distance(s.data(), t.data(), d);
      CHECK(got == doctest::Approx(wrap_oracle(s.data(), t.data(), d)).epsilon(1e-14));
      CHECK(got <= 0.5 + 1e-15);
    }
}

TEST_CASE("wrap distance is a metric on random triples") {
  SplitMix64 rng(12);
  for (int d = 1; d <= 3; ++d)
    for (int it = 0; it < 1000; ++it) {
      std::vector<double> a(d), b(d), c(d);
      for (int l = 0; l < d; ++l) {
        a[l] = rng.uniform();
        b[l] = rng.uniform();
        c[l] = rng.uniform();
      }
      double ab = wrap_distance(a.data(), b.data(), d);
      double ba = wrap_distance(b.data(), a.data(), d);
      double ac = wrap_distance(a.data(), c.data(), d);
      double cb = wrap_distance(c.data(), b.data(), d);
      CHECK(ab == ba);
      CHECK(ab <= ac + cb + 1e-15);
    }
}

TEST_CASE("make_node_set reduces coordinates mod 1") {
  NodeSet ns = make_node_set(1, 9, {1.25, -0.25, 3.0});
  CHECK(ns.coords[0] == doctest::Approx(0.25));
  CHECK(ns.coords[1] == doctest::Approx(0.75));
  CHECK(ns.coords[2] == 0.0);
  CHECK_THROWS_AS(make_node_set(0, 9, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(make_node_set(2, 9, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(make_node_set(1, 0, {0.1}), std::invalid_argument);
}

TEST_CASE("decompose_clusters examples") {
  // single node
  NodeSet one = make_node_set(1, 9, {0.3});
  auto cd1 = decompose_clusters(one);
  CHECK(cd1.clusters.size() == 1);
  CHECK(cd1.lambda == 1);
  CHECK(cd1.valid);

  // pair + far singleton, N = 100
  NodeSet ns = make_node_set(1, 99, {0.0, 0.005, 0.5});
  auto cd = decompose_clusters(ns);
  REQUIRE(cd.clusters.size() == 2);
  CHECK(cd.lambda == 2);
  CHECK(cd.valid);
  CHECK(cd.clusters[0] == std::vector<long>{0, 1});
  CHECK(cd.clusters[1] == std::vector<long>{2});

  // chain: links of 0.08 <= 1/N = 0.1 but diameter 0.16 > 0.1
  NodeSet chain = make_node_set(1, 9, {0.0, 0.08, 0.16});
  auto cdc = decompose_clusters(chain);
  CHECK(cdc.clusters.size() == 1);
  CHECK_FALSE(cdc.valid);
  CHECK(cdc.message.find("diameter") != std::string::npos);
}

TEST_CASE("decompose_clusters is permutation invariant") {
  SplitMix64 rng(13);
  vandtest::ClusteredParams p;
  p.d = 2;
  p.n = 63;
  p.L = 4;
  p.lambda_max = 3;
  NodeSet ns = vandtest::random_clustered(rng, p);
  auto cd = decompose_clusters(ns);

  // reverse the node order
  long M = ns.size();
  std::vector<double> rev;
  for (long j = M - 1; j >= 0; --j)
    for (int l = 0; l < ns.d; ++l) rev.push_back(ns.node(j)[l]);
  NodeSet ns2 = make_node_set(ns.d, ns.n, rev);
  auto cd2 = decompose_clusters(ns2);

  auto canon = [M](const ClusterDecomposition& c, bool reversed) {
    std::vector<std::vector<long>> out;
    for (auto cl : c.clusters) {
      if (reversed)
        for (auto& j : cl) j = M - 1 - j;
      std::sort(cl.begin(), cl.end());
      out.push_back(cl);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(canon(cd, false) == canon(cd2, true));
}

TEST_CASE("geometry_summary examples") {
  // two singleton clusters at distance 1/2, N = 10
  NodeSet ns = make_node_set(1, 9, {0.0, 0.5});
  auto gs = geometry_summary(ns, decompose_clusters(ns));
  CHECK(gs.rho == doctest::Approx(5.0));
  CHECK(gs.tau == doctest::Approx(5.0));
  CHECK(gs.complexity == doctest::Approx(1.0));
  CHECK(gs.valid);

  // pair {0, tau/N} with tau = 0.01, N = 100: complexity 1/tau
  NodeSet pair = make_node_set(1, 99, {0.0, 0.01 / 100.0});
  auto gp = geometry_summary(pair, decompose_clusters(pair));
  CHECK(gp.lambda == 2);
  CHECK(gp.tau == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(gp.complexity == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(std::isinf(gp.rho));  // single cluster

  // equispaced 5-cluster, spacing tau/N, tau = 0.1: complexity 1/(4 tau^4)
  NodeSet eq = vandtest::equispaced_cluster(1, 99, 5, 0.1);
  auto ge = geometry_summary(eq, decompose_clusters(eq));
  CHECK(ge.lambda == 5);
  CHECK(ge.complexity == doctest::Approx(2500.0).epsilon(1e-11));
  CHECK(ge.center == 2);  // middle node sees the tightest neighbourhood
  CHECK(ge.tau == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("max_complexity examples and geometry agreement") {
  CHECK(max_complexity(1, 0.37) == 1.0);
  CHECK(max_complexity(2, 0.5) == doctest::Approx(2.0));
  CHECK(max_complexity(5, 0.1) == doctest::Approx(2500.0).epsilon(1e-12));
  CHECK_THROWS_AS(max_complexity(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(max_complexity(2, 0.0), std::invalid_argument);

  // equality for the equispaced cluster construction; tau is scaled so the
  // cluster diameter (lambda-1)*tau/N stays below 1/N
  for (long lambda : {2L, 3L, 4L, 6L}) {
    double tau = 0.8 / (double)lambda;
    NodeSet ns = vandtest::equispaced_cluster(1, 511, lambda, tau);
    auto gs = geometry_summary(ns, decompose_clusters(ns));
    REQUIRE(gs.valid);
    REQUIRE(gs.lambda == lambda);
    CHECK(gs.complexity ==
          doctest::Approx(max_complexity(lambda, gs.tau)).epsilon(1e-10));
  }
}

TEST_CASE("complexity bounds on random valid configurations") {
  SplitMix64 rng(14);
  for (int it = 0; it < 200; ++it) {
    vandtest::ClusteredParams p;
    p.d = 1 + (int)rng.below(3);
    p.n = 127;
    p.L = 2 + (long)rng.below(3);
    p.lambda_max = 1 + (long)rng.below(3);
    p.tau = 0.2 + 0.6 * rng.uniform();
    NodeSet ns = vandtest::random_clustered(rng, p);
    auto cd = decompose_clusters(ns);
    auto gs = geometry_summary(ns, cd);
    REQUIRE(gs.valid);
    if (gs.M < 2) continue;
    // C <= tau^{1-lambda}, equality when lambda <= 2
    double cap = std::pow(gs.tau, 1.0 - (double)gs.lambda);
    CHECK(gs.complexity <= cap * (1 + 1e-9));
    if (gs.lambda <= 2) CHECK(gs.complexity == doctest::Approx(cap).epsilon(1e-9));
    CHECK(gs.complexity <= max_complexity(gs.lambda, gs.tau) * (1 + 1e-9));
    CHECK(gs.tau <= gs.rho * (1 + 1e-12));
  }
}

TEST_CASE("shell packing") {
  // 99 equispaced nodes with N = 100: singletons at rho slightly above 1,
  // every outer shell holds at most one node per side.
  {
    std::vector<double> coords;
    for (int j = 0; j < 99; ++j) coords.push_back(j / 99.0);
    NodeSet ns = make_node_set(1, 99, coords);
    auto cd = decompose_clusters(ns);
    REQUIRE(cd.lambda == 1);
    auto gs = geometry_summary(ns, cd);
    CHECK(gs.rho == doctest::Approx(100.0 / 99.0));
    auto rows = shell_packing_check(ns, gs, gs.center);
    REQUIRE(!rows.empty());
    for (const auto& r : rows) {
      CHECK(r.pass);
      if (r.m >= 1) CHECK(r.count <= 2);
    }
  }

  // single node: no finite shells
  {
    NodeSet ns = make_node_set(1, 9, {0.25});
    auto gs = geometry_summary(ns, decompose_clusters(ns));
    CHECK(gs.shell_counts == std::vector<long>{1});
    CHECK(shell_packing_check(ns, gs, 0).empty());
  }

  // random valid configurations across dimensions
  SplitMix64 rng(15);
  for (int it = 0; it < 100; ++it) {
    vandtest::ClusteredParams p;
    p.d = 1 + (int)rng.below(3);
    p.n = 63;
    p.L = 2 + (long)rng.below(4);
    p.lambda_max = 1 + (long)rng.below(3);
    NodeSet ns = vandtest::random_clustered(rng, p);
    auto gs = geometry_summary(ns, decompose_clusters(ns));
    REQUIRE(gs.valid);
    for (long c = 0; c < gs.M; ++c)
      for (const auto& r : shell_packing_check(ns, gs, c)) CHECK(r.pass);
  }
}

TEST_CASE("geometry CSV row") {
  NodeSet ns = make_node_set(1, 9, {0.0, 0.5});
  auto gs = geometry_summary(ns, decompose_clusters(ns));
  CHECK(geometry_csv_header() == "d,n,N,M,L,lambda,rho,tau,complexity,valid");
  CHECK(geometry_csv_row(gs) == "1,9,10,2,2,1,5,5,1,1");
}
