#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "gothic/qexp.hpp"

using namespace gothic;

namespace {

CycQuad random_cyc(std::mt19937_64& rng, i64 d) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  CycQuad c;
  for (int r = 0; r < 4; ++r) c[r] = QuadElem(d, Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  return c;
}

HilbertSeries truncate(const HilbertSeries& s, const Rat& B) {
  HilbertSeries r = s;
  r.bound = B;
  std::erase_if(r.terms, [&](const auto& kv) { return kv.first.trace() > B; });
  return r;
}

bool same_series(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.terms.size() != b.terms.size() || !(a.prefactor == b.prefactor)) return false;
  for (const auto& [nu, c] : a.terms) {
    auto it = b.terms.find(nu);
    if (it == b.terms.end() || !(it->second == c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cyclotomic relations") {
  CHECK(CycQuad::zeta_pow(12) == CycQuad(QuadElem::rational(Rat(1))));
  CHECK(CycQuad::zeta_pow(6) == CycQuad(QuadElem::rational(Rat(-1))));
  CHECK(CycQuad::zeta_pow(4) == CycQuad::zeta_pow(2) - CycQuad(QuadElem::rational(Rat(1))));
  CHECK(CycQuad::zeta_pow(-1) * CycQuad::zeta_pow(1) == CycQuad(QuadElem::rational(Rat(1))));
  CHECK(CycQuad::zeta_pow(-7) == CycQuad::zeta_pow(5));
  PrecisionGuard pg(30);
  const Complex z = CycQuad::zeta_pow(1).embed(0, 30);
  CHECK(static_cast<double>(z.re) == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(static_cast<double>(z.im) == doctest::Approx(0.5));
}

TEST_CASE("CycQuad ring axioms") {
  std::mt19937_64 rng(23);
  for (i64 d : {12, 24, 33}) {
    for (int i = 0; i < 100; ++i) {
      const CycQuad a = random_cyc(rng, d), b = random_cyc(rng, d), c = random_cyc(rng, d);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!b.is_zero()) {
        const auto q = cyc_divide(a * b, b);
        REQUIRE(q);
        CHECK(*q == a);
      }
    }
  }
}

TEST_CASE("theta cosets") {
  const auto c0 = theta_cosets(0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].eps == Rat(0));
  CHECK(c0[0].delta == frac(1, 2));
  const auto c2 = theta_cosets(2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].eps == Rat(0));
  CHECK(c2[0].delta == frac(1, 6));
  CHECK_THROWS(theta_cosets(4));
}

TEST_CASE("enumerator is complete: D=24, Q=(2,0,-3), B=5") {
  const i64 D = 24;
  const Form Q{2, 0, -3};
  const QuadElem lam = form_irrationality(D, Q);
  const Rat B(5);
  for (int j = 0; j < 4; ++j) {
    for (const auto& c : theta_cosets(j)) {
      std::set<std::pair<Rat, Rat>> got;
      for (const auto& p : coset_points(D, Q, c, B)) got.insert(p);
      std::set<std::pair<Rat, Rat>> want;
      for (long n1 = -20; n1 <= 20; ++n1) {
        for (long n2 = -20; n2 <= 20; ++n2) {
          const Rat x1 = Rat(n1) + c.eps, x2 = Rat(n2) + c.delta;
          const QuadElem rho = QuadElem::rational(x1) + QuadElem::rational(x2) * lam;
          const Rat t = (rho * rho).trace();
          if (t <= B) want.insert({x1, x2});
        }
      }
      CHECK(got == want);
      CHECK_FALSE(got.empty());
    }
  }
}

TEST_CASE("exponents are totally nonnegative and below the bound") {
  for (i64 D : {12, 24, 28, 33}) {
    const Form Q = default_adapted_form(D);
    for (int j = 0; j < 4; ++j) {
      const auto s = theta_deriv_nullwert(D, Q, j, 1, Rat(8));
      for (const auto& [nu, c] : s.terms) {
        CHECK(nu.sign(0) >= 0);
        CHECK(nu.sign(1) >= 0);
        CHECK(nu.trace() <= Rat(8));
        CHECK_FALSE(c.is_zero());
      }
    }
  }
}

TEST_CASE("odd symmetry of the Nullwert terms") {
  for (i64 D : {24, 28, 33, 40}) {
    const Form Q = default_adapted_form(D);
    for (int j = 0; j < 4; ++j) {
      for (int axis : {1, 2}) {
        const auto terms = nullwert_terms(D, Q, j, axis, Rat(10));
        std::map<std::pair<Rat, Rat>, const LatticeTerm*> by_x;
        for (const auto& t : terms) by_x[{t.x1, t.x2}] = &t;
        for (const auto& t : terms) {
          auto it = by_x.find({-t.x1, -t.x2});
          REQUIRE(it != by_x.end());
          const LatticeTerm& m = *it->second;
          CHECK(m.nu == t.nu);
          if (j == 0 || j == 3) {
            CHECK(m.coeff == t.coeff);
          } else {
            Rat six = t.x2 * 6;
            six.canonicalize();
            if (mpz_fdiv_ui(six.get_num_mpz_t(), 6) == 5) CHECK(m.coeff == -(CycQuad::zeta_pow(2) * t.coeff));
            else CHECK(t.coeff == -(CycQuad::zeta_pow(2) * m.coeff));
          }
        }
      }
    }
  }
}

TEST_CASE("series algebra edge cases") {
  const i64 D = 24;
  const Form Q{2, 0, -3};
  const auto s = theta_deriv_nullwert(D, Q, 0, 1, Rat(6));
  CHECK(series_sub(s, s).terms.empty());
  HilbertSeries empty;
  empty.D = D;
  empty.Q = Q;
  empty.bound = Rat(6);
  CHECK(series_mul(s, empty).terms.empty());
  CHECK(tau_derivative(empty, 1).terms.empty());
  CHECK(gothic_direct(D, Q, frac(1, 100)).terms.empty());
  CHECK(gothic_form(28, default_adapted_form(28), Rat(8)).size() > 0);
}

TEST_CASE("double derivative multiplies by nu squared") {
  const i64 D = 28;
  const Form Q = default_adapted_form(D);
  const auto g = gothic_form(D, Q, Rat(8));
  const auto d11 = tau_derivative(tau_derivative(g, 1), 1);
  const auto d22 = tau_derivative(tau_derivative(g, 2), 2);
  for (const auto& [nu, c] : g.terms) {
    CHECK(d11.terms.at(nu) == c * (nu * nu));
    CHECK(d22.terms.at(nu) == c * (nu.conj() * nu.conj()));
  }
  CHECK(d11.prefactor == g.prefactor.times({0, 2, 2}));
}

TEST_CASE("truncation soundness") {
  for (i64 D : {24, 33}) {
    const Form Q = default_adapted_form(D);
    CHECK(same_series(truncate(gothic_form(D, Q, Rat(10)), Rat(6)), gothic_form(D, Q, Rat(6))));
    CHECK(same_series(truncate(gothic_direct(D, Q, Rat(9)), Rat(5)), gothic_direct(D, Q, Rat(5))));
    for (int j = 0; j < 4; ++j)
      CHECK(same_series(truncate(theta_deriv_nullwert(D, Q, j, 2, Rat(12)), Rat(7)),
                        theta_deriv_nullwert(D, Q, j, 2, Rat(7))));
  }
}

TEST_CASE("cross-expansion up to one global scalar") {
  std::optional<CycQuad> first;
  for (i64 D : {24, 28, 33}) {
    const Form Q = default_adapted_form(D);
    const auto s = solve_global_scalar(gothic_form(D, Q, Rat(8)), gothic_direct(D, Q, Rat(8)));
    REQUIRE(s);
    if (!first) first = s;
    CHECK(*s == *first);
  }
  // product form = (1 - zeta^-2) * direct form
  CHECK(*first == CycQuad(QuadElem::rational(Rat(1))) - CycQuad::zeta_pow(-2));
}

TEST_CASE("vanishing to order two along every F_P") {
  int checked = 0;
  for (i64 D = 25; D <= 100; ++D) {
    if (!is_discriminant(D)) continue;
    for (const auto& P : enumerate_PD(D)) {
      const auto fr = prototype_frame(D, P);
      const auto g = gothic_form(D, fr.Q, Rat(10));
      CAPTURE(D);
      REQUIRE(restrict_series(g, D, P).is_zero());
      REQUIRE(restrict_series(tau_derivative(g, 1), D, P).is_zero());
      REQUIRE(restrict_series(tau_derivative(g, 2), D, P).is_zero());
      const auto r11 = restrict_series(tau_derivative(tau_derivative(g, 1), 1), D, P);
      REQUIRE_FALSE(r11.is_zero());
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("lowest second-derivative coefficient for D=24") {
  const RmPrototype P{1, 0, 1};
  const auto fr = prototype_frame(24, P);
  const auto d = gothic_direct(24, fr.Q, Rat(10));
  const auto r = restrict_series(tau_derivative(tau_derivative(d, 1), 1), 24, P);
  REQUIRE_FALSE(r.is_zero());
  CHECK(r.terms.begin()->first == frac(1, 3));
  CHECK(r.terms.begin()->second == CycQuad::zeta_pow(4) * QuadElem::rational(frac(-1, 6)));
}

TEST_CASE("restriction requires the prototype basis") {
  const auto g = gothic_form(28, default_adapted_form(28), Rat(6));
  CHECK_THROWS(restrict_series(g, 24, RmPrototype{1, 0, 1}));
}

TEST_CASE("numeric evaluation") {
  PrecisionGuard pg(40);
  HilbertSeries s;
  s.D = 24;
  s.Q = Form{2, 0, -3};
  s.bound = Rat(2);
  const Complex i(Real(0), Real(1));
  CHECK(static_cast<double>(abs(numeric_eval(s, i, i, 40).value)) == 0.0);
  s.add_term(QuadElem::rational(Rat(1)), CycQuad(QuadElem::rational(Rat(1))));
  const auto v = numeric_eval(s, i, i, 40);
  const Real want = boost::multiprecision::exp(-2 * pi());
  CHECK(static_cast<double>(boost::multiprecision::abs(v.value.re - want)) < 1e-35);
  CHECK(static_cast<double>(boost::multiprecision::abs(v.value.im)) < 1e-35);
  CHECK_THROWS(numeric_eval(s, Complex(Real(0), Real(-1)), i, 40));
}

TEST_CASE("series JSON layout") {
  const auto g = gothic_form(24, Form{2, 0, -3}, Rat(4));
  const auto j = to_json(g);
  CHECK(j.dump() == to_json(gothic_form(24, Form{2, 0, -3}, Rat(4))).dump());
  CHECK(j.contains("terms"));
  CHECK(j["terms"].size() == g.size());
}
