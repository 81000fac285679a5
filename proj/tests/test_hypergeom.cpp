#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gothic/hypergeom.hpp"

using namespace gothic;

namespace {

// f(g(t)) truncated to N terms, g(0) = 0
RatSeries compose(const RatSeries& f, const RatSeries& g, int N) {
  RatSeries out(static_cast<std::size_t>(N), Rat(0)), pw(static_cast<std::size_t>(N), Rat(0));
  pw[0] = 1;
  for (int k = 0; k < N; ++k) {
    for (int i = 0; i < N; ++i) out[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(k)] * pw[static_cast<std::size_t>(i)];
    RatSeries next(static_cast<std::size_t>(N), Rat(0));
    for (int i = 0; i < N; ++i)
      for (int j = 1; i + j < N; ++j)
        next[static_cast<std::size_t>(i + j)] += pw[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    pw = std::move(next);
  }
  return out;
}

double to_d(const Real& x) { return static_cast<double>(x); }

}  // namespace

TEST_CASE("hypergeometric coefficients") {
  const auto y = y1_series(frac(5, 12), frac(1, 4), 10);
  CHECK(y[0] == Rat(1));
  CHECK(y[1] == frac(5, 48));
  CHECK(y1_series(frac(1, 4), frac(1, 12), 4)[1] == frac(1, 48));
  const auto z = y2_series(frac(5, 12), frac(1, 4), 10);
  CHECK(z[0] == Rat(0));
  CHECK(z[1] == frac(5, 48) * (frac(12, 5) + 4 - 2));
}

TEST_CASE("both solutions satisfy the hypergeometric equation") {
  for (auto [a, b] : {std::pair{frac(5, 12), frac(1, 4)}, std::pair{frac(1, 4), frac(1, 12)}}) {
    const auto [r1, r2] = ode_residuals(a, b, 40);
    for (const auto& x : r1) CHECK(x == 0);
    for (const auto& x : r2) CHECK(x == 0);
    CHECK(r1.size() > 30);
  }
}

TEST_CASE("Q map and its reversion") {
  const int N = 25;
  const auto Q = q_map_series(frac(5, 12), frac(1, 4), N);
  CHECK(Q[0] == Rat(0));
  CHECK(Q[1] == Rat(1));
  const auto t = series_reversion(Q, N);
  const auto id = compose(Q, t, N);
  for (int i = 0; i < N; ++i) CHECK(id[static_cast<std::size_t>(i)] == (i == 1 ? Rat(1) : Rat(0)));
  const auto back = series_reversion(t, N);
  for (int i = 0; i < N; ++i) CHECK(back[static_cast<std::size_t>(i)] == Q[static_cast<std::size_t>(i)]);
}

TEST_CASE("constants A and A-tilde") {
  const auto A = constant_A(0, 30, 200);
  const auto At = constant_A(1, 30, 200);
  PrecisionGuard pg(60);
  CHECK(to_d(A.abs_err / A.closed) < 1e-25);
  CHECK(to_d(At.abs_err / At.closed) < 1e-25);
  CHECK(to_d(boost::multiprecision::abs(A.value - Real("33.9797081543461844465412173813877"))) < 1e-29);
  CHECK(to_d(boost::multiprecision::abs(At.value - Real("3254.6483182744669365311774168770392"))) < 1e-27);
  CHECK(A.geometric);
  CHECK_THROWS(constant_A(0, 30, 20));
}

TEST_CASE("ratio deltas for A decay geometrically") {
  const auto A = constant_A(0, 30, 200);
  const auto& d = A.ratio_deltas;
  int streak = 0, best = 0;
  for (std::size_t i = 1; i < d.size() / 2; ++i) {
    if (d[i] < d[i - 1] * Real(0.9) && d[i] > 0) best = std::max(best, ++streak);
    else streak = 0;
  }
  CHECK(best > 10);
}

TEST_CASE("phi coefficients are the displayed rationals") {
  const auto c = phi_exact_coeffs(5);
  REQUIRE(c.size() == 5);
  CHECK(c[0] == frac(-1, 6));
  CHECK(c[1] == frac(-5, 1152));
  CHECK(c[2] == frac(-61, 497664));
  CHECK(c[3] == frac(-713, 382205952));
  CHECK(c[4] == frac(-4943, 183458856960));
}

TEST_CASE("modular embedding") {
  const auto ph = phi_expansion(200, 30);
  CHECK(ph.slope == QuadElem(3, Rat(2), Rat(-1)));
  PrecisionGuard pg(60);
  CHECK(to_d(boost::multiprecision::abs(ph.constant.re)) < 1e-25);
  CHECK(to_d(ph.constant.im) == doctest::Approx(0.61375).epsilon(1e-4));
  CHECK(to_d(abs(ph.constant + ph.constant_closed)) < 1e-25);
  // the numeric series coefficients agree with the exact ones
  for (int n = 1; n <= 5; ++n) {
    const Real exact(phi_exact_coeffs(5)[static_cast<std::size_t>(n - 1)].get_d());
    CHECK(to_d(ph.r[static_cast<std::size_t>(n)]) == doctest::Approx(to_d(exact)).epsilon(1e-14));
  }
  // i is the elliptic fixed point of order 3 and is mapped to the matching fixed point
  const Complex i(Real(0), Real(1));
  CHECK(to_d(abs(phi_eval(ph, i) - i)) < 1e-20);
  const Real s3 = boost::multiprecision::sqrt(Real(3));
  const Real al = 2 + 2 * s3 / 3, als = 2 - 2 * s3 / 3;
  for (const auto& [x, y] : std::vector<std::pair<double, double>>{{0.1, 0.9}, {-0.4, 1.2}, {1.3, 0.7}, {2.0, 1.5}, {0.0, 2.5}}) {
    const Complex tau{Real(x), Real(y)};
    const Complex lhs = phi_eval(ph, tau + Complex(al));
    const Complex rhs = phi_eval(ph, tau) + Complex(als);
    CHECK(to_d(abs(lhs - rhs) / abs(rhs)) < 1e-10);
  }
  const auto [t1, t2] = embed_point(ph, Complex(Real("0.3"), Real("1.5")));
  CHECK(t2.im > 0);
  CHECK_THROWS(embed_point(ph, Complex(Real(0), Real(-1))));
}

TEST_CASE("G12 vanishes along the embedded curve") {
  const auto ph = phi_expansion(200, 30);
  std::vector<std::pair<Complex, Complex>> pts;
  for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{{"0.3", "1.5"}, {"-0.7", "1.6"}, {"1.1", "2.0"}})
    pts.push_back(embed_point(ph, Complex(Real(x), Real(y))));
  const auto res = g12_search(pts);
  REQUIRE(res.best_residuals.size() == 3);
  for (double r : res.best_residuals) CHECK(r < 1e-6);
  CHECK(res.log.size() == g12_conventions().size());
  // off the curve the form does not vanish
  const auto off = g12_evaluate(res.best, Complex(Real("0.3"), Real("1.5")), Complex(Real("0.2"), Real("1.1")));
  CHECK(off.residual > 1e-6);
}
