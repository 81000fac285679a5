#pragma once

#include <vector>

#include "gothic/arith.hpp"

namespace gothic {

struct FormPrototype {
  i64 a = 0, b = 0, c = 0;
  i64 k = 1;
  friend bool operator==(const FormPrototype&, const FormPrototype&) = default;
};

struct RmPrototype {
  i64 ell = 0, e = 0, m = 0;
  friend bool operator==(const RmPrototype&, const RmPrototype&) = default;
};

struct Norm6Ideal {
  i64 r = 0;  // ideal generated by 6 and (r + sqrt D)/2
};

// quadratic form (a, b, c) with D = b^2 - 4ac
struct Form {
  i64 a = 0, b = 0, c = 0;
  friend bool operator==(const Form&, const Form&) = default;
};

// P_k(D) = {[a,b,c] : a > 0 > c, D = b^2 - 4kac, gcd(f, b, c/c0) = 1}, sorted by (b, a)
std::vector<FormPrototype> enumerate_Pk(i64 D, i64 k);

// sum of a over P_k(D)
i64 prototype_sum(i64 D, i64 k);

// same sum for fundamental D through a sigma_1 table, no enumeration
i64 prototype_sum_fundamental(i64 D, i64 k, const Sigma1Table& sigma);

// P_D = {[l,e,m] : l,m > 0, D = e^2 + 24 l^2 m, gcd(e,l,f) = 1}, sorted by (e, l, m)
std::vector<RmPrototype> enumerate_PD(i64 D);

Rat chi_gamma0(i64 m);

std::vector<Norm6Ideal> norm6_ideals(i64 D);

bool adapted_basis_check(i64 a, i64 b, i64 c, i64 d1, i64 d2, i64 D);

struct PrototypeFrame {
  Form Q;
  QuadElem lambda;
  QuadElem alpha;
};

PrototypeFrame prototype_frame(i64 D, const RmPrototype& P);

// lambda_Q = (-b + sqrt D)/(2a)
QuadElem form_irrationality(i64 D, const Form& Q);

// smallest a > 0 with 2 | a, then smallest |b| (b >= 0 first) with 3 | c
Form default_adapted_form(i64 D);

}  // namespace gothic
