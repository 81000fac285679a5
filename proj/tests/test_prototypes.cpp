#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "gothic/prototypes.hpp"

using namespace gothic;

TEST_CASE("P_k(D) examples") {
  const auto p12 = enumerate_Pk(12, 1);
  CHECK(p12.size() == 6);
  i64 s = 0;
  for (const auto& p : p12) s += p.a;
  CHECK(s == 10);
  CHECK(enumerate_Pk(12, 6).empty());
  const auto p33 = enumerate_Pk(33, 6);
  REQUIRE(p33.size() == 2);
  CHECK(p33[0] == FormPrototype{1, -3, -1, 6});
  CHECK(p33[1] == FormPrototype{1, 3, -1, 6});
  CHECK(prototype_sum(24, 1) == 30);
  CHECK(prototype_sum(24, 6) == 1);
  CHECK(prototype_sum(12, 6) == 0);
}

TEST_CASE("every emitted form prototype satisfies its definition") {
  for (i64 D = 5; D <= 1500; ++D) {
    if (!is_discriminant(D)) continue;
    const i64 f = split_discriminant(D).f;
    for (i64 k : {1, 6}) {
      for (const auto& p : enumerate_Pk(D, k)) {
        REQUIRE(D == p.b * p.b - 4 * k * p.a * p.c);
        REQUIRE(p.a > 0);
        REQUIRE(p.c < 0);
        const i64 c0 = squarefree_part(p.c);
        REQUIRE(gcd(gcd(f, p.b), -p.c / c0) == 1);
      }
    }
  }
}

TEST_CASE("fundamental prototype sum matches enumeration") {
  const Sigma1Table sig(2000);
  for (i64 D = 5; D <= 8000; ++D) {
    if (!is_fundamental(D)) continue;
    for (i64 k : {1, 6}) REQUIRE(prototype_sum_fundamental(D, k, sig) == prototype_sum(D, k));
  }
}

TEST_CASE("P_D examples") {
  const auto p24 = enumerate_PD(24);
  REQUIRE(p24.size() == 1);
  CHECK(p24[0] == RmPrototype{1, 0, 1});
  const auto p28 = enumerate_PD(28);
  REQUIRE(p28.size() == 2);
  CHECK(p28[0] == RmPrototype{1, -2, 1});
  CHECK(p28[1] == RmPrototype{1, 2, 1});
  CHECK(enumerate_PD(12).empty());
}

TEST_CASE("chi of Gamma0(m)") {
  CHECK(chi_gamma0(1) == Rat(-1, 6));
  CHECK(chi_gamma0(2) == Rat(-1, 2));
  CHECK(chi_gamma0(6) == Rat(-2));
}

TEST_CASE("duality of the two prototype languages") {
  for (i64 D = 5; D <= 2000; ++D) {
    if (!is_discriminant(D)) continue;
    Rat lhs(0);
    for (const auto& P : enumerate_PD(D)) lhs += chi_gamma0(P.m);
    REQUIRE(lhs == Rat(-prototype_sum(D, 6)) / 6);
  }
}

TEST_CASE("P_D is closed under e -> -e and satisfies its definition") {
  for (i64 D = 5; D <= 3000; ++D) {
    if (!is_discriminant(D)) continue;
    const i64 f = split_discriminant(D).f;
    const auto ps = enumerate_PD(D);
    for (const auto& P : ps) {
      REQUIRE(D == P.e * P.e + 24 * P.ell * P.ell * P.m);
      REQUIRE(gcd(gcd(P.e, P.ell), f) == 1);
      const RmPrototype Q{P.ell, -P.e, P.m};
      REQUIRE(std::find(ps.begin(), ps.end(), Q) != ps.end());
    }
  }
}

TEST_CASE("norm-6 ideals") {
  CHECK(norm6_ideals(12).size() == 1);
  const auto i33 = norm6_ideals(33);
  REQUIRE(i33.size() == 2);
  CHECK(i33[0].r == 3);
  CHECK(i33[1].r == 9);
  CHECK(norm6_ideals(73).size() == 4);
  for (i64 D = 5; D <= 2000; ++D) {
    if (!is_discriminant(D)) continue;
    const i64 r = D % 24;
    const bool admissible = r == 0 || r == 1 || r == 4 || r == 9 || r == 12 || r == 16;
    if (!admissible) {
      CHECK(norm6_ideals(D).empty());
      continue;
    }
    const auto ids = norm6_ideals(D);
    REQUIRE_FALSE(ids.empty());
    for (const auto& id : ids) {
      REQUIRE((id.r * id.r - D) % 24 == 0);
      REQUIRE(id.r >= 0);
      REQUIRE(id.r < 12);
    }
  }
}

TEST_CASE("norm-6 ideal counts match the appendix") {
  std::ifstream in(std::string(GOTHIC_FIXTURES) + "/appendix_table.csv");
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string D, k;
    std::getline(ss, D, ',');
    std::getline(ss, k, ',');
    CHECK(norm6_ideals(std::stoll(D)).size() == std::stoul(k));
    ++rows;
  }
  CHECK(rows == 66);
}

TEST_CASE("adapted basis check") {
  CHECK(adapted_basis_check(2, 6, 3, 2, 3, 12));
  CHECK_FALSE(adapted_basis_check(2, 2, -1, 2, 3, 12));
  for (i64 D = 25; D <= 600; ++D) {
    if (!is_discriminant(D)) continue;
    for (const auto& P : enumerate_PD(D)) CHECK(adapted_basis_check(2 * P.ell, P.e, -3 * P.ell * P.m, 2, 3, D));
  }
}

TEST_CASE("prototype frame for D=24") {
  const auto fr = prototype_frame(24, RmPrototype{1, 0, 1});
  CHECK(fr.Q == Form{2, 0, -3});
  CHECK(fr.lambda == QuadElem(24, Rat(0), Rat(1, 4)));
  CHECK(fr.alpha == QuadElem::rational(Rat(1, 4)));
  const auto rho_sq_trace = [&](const Rat& x1, const Rat& x2) {
    const QuadElem rho = QuadElem::rational(x1) + QuadElem::rational(x2) * fr.lambda;
    return (fr.alpha * rho * rho).trace();
  };
  CHECK(rho_sq_trace(Rat(1), Rat(0)) == Rat(1, 2));
  CHECK(rho_sq_trace(Rat(0), Rat(1)) == Rat(3, 4));
}

TEST_CASE("alpha is totally positive and the restricted form is diagonal") {
  std::vector<std::pair<i64, RmPrototype>> all;
  for (i64 D = 25; D <= 4000 && all.size() < 400; ++D) {
    if (!is_discriminant(D)) continue;
    for (const auto& P : enumerate_PD(D)) all.emplace_back(D, P);
  }
  std::mt19937_64 rng(5);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(50);
  for (const auto& [D, P] : all) {
    const auto fr = prototype_frame(D, P);
    REQUIRE(fr.alpha.totally_positive());
    CHECK(fr.lambda.norm() == Rat(-3 * P.m) / 2);
    // tr(alpha (x1 + x2 lambda)^2) = (1/(2l)) (x1^2 + (3/2) m x2^2), read off from three sample points
    const auto q = [&](i64 x1, i64 x2) {
      const QuadElem rho = QuadElem::rational(Rat(x1)) + QuadElem::rational(Rat(x2)) * fr.lambda;
      return (fr.alpha * rho * rho).trace();
    };
    const Rat l2 = 2 * P.ell;
    CHECK(q(1, 0) == 1 / l2);
    CHECK(q(0, 1) == (Rat(3 * P.m) / 2) / l2);
    CHECK(q(1, 1) == (1 + (Rat(3 * P.m) / 2)) / l2);
  }
}

TEST_CASE("default adapted form") {
  CHECK(default_adapted_form(12) == Form{2, 6, 3});
  for (i64 D = 5; D <= 500; ++D) {
    if (!is_discriminant(D)) continue;
    const i64 r = D % 24;
    if (r != 0 && r != 1 && r != 4 && r != 9 && r != 12 && r != 16) continue;
    const Form Q = default_adapted_form(D);
    CHECK(Q.b * Q.b - 4 * Q.a * Q.c == D);
    CHECK(Q.a % 2 == 0);
    CHECK(Q.c % 3 == 0);
  }
}
