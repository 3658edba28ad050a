#include "qbundle/zoo.hpp"

#include <algorithm>

#include "qbundle/builders.hpp"

namespace qb {

InstanceFile ZooEntry::instance() const {
  InstanceFile inst;
  inst.name = name;
  inst.comodule = build();
  if (!extras.empty()) {
    inst.n_p_generators = extras.front().n_p_generators;
    inst.v_generators = extras.front().v_generators;
  }
  return inst;
}

namespace {

Vector q(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<ZooEntry> make_zoo() {
  std::vector<ZooEntry> z;
  z.push_back({"kz2_regular", "kZ2 coacting on itself by its coproduct",
               [] { return regular_comodule(group_algebra(cyclic_group(2))); },
               {{"dg_with_g_minus_1", {q({0, 1, -1, 0})}, {q({-1, 1})}}}});
  z.push_back({"kz3_regular", "kZ3 coacting on itself",
               [] { return regular_comodule(group_algebra(cyclic_group(3))); }, {}});
  z.push_back({"ks3_regular", "kS3 coacting on itself",
               [] { return regular_comodule(group_algebra(symmetric_group_s3())); }, {}});
  z.push_back({"dual_z2_regular", "functions on Z2 coacting on themselves",
               [] { return regular_comodule(dual_group_hopf(cyclic_group(2))); }, {}});
  z.push_back({"dual_z3_regular", "functions on Z3 coacting on themselves",
               [] { return regular_comodule(dual_group_hopf(cyclic_group(3))); }, {}});
  z.push_back({"dual_s3_regular", "functions on S3 coacting on themselves",
               [] { return regular_comodule(dual_group_hopf(symmetric_group_s3())); }, {}});
  z.push_back({"sweedler_h4", "Sweedler's four-dimensional Hopf algebra coacting on itself",
               [] { return regular_comodule(sweedler_h4()); }, {}});
  z.push_back({"gal_sqrt2", "Q(sqrt 2) over Q with the Galois group Z2",
               [] { return field_extension_comodule(q({-2, 0, 1}), {q({0, -1})}); }, {}});
  z.push_back({"gal_cyclotomic3", "Q(zeta_3) over Q with complex conjugation",
               [] { return field_extension_comodule(q({1, 1, 1}), {q({-1, -1})}); }, {}});
  z.push_back({"gal_biquadratic", "Q(sqrt 2, sqrt 3) over Q with the Klein four group",
               [] {
                 return field_extension_comodule(q({1, 0, -10, 0, 1}),
                                                 {q({0, 10, 0, -1}), q({0, -10, 0, 1}), q({0, -1, 0, 0})});
               },
               {}});
  z.push_back({"z2_graded_dual_numbers", "Q[x]/(x^2) graded by deg x = 1 over kZ2",
               [] { return graded_comodule(truncated_polynomial(2), {0, 1}, 2); },
               {{"xx_with_zero", {q({0, 0, 0, 1})}, {}}}});
  z.push_back({"z2_graded_split", "Q[x]/(x^2 - 1) graded by deg x = 1 over kZ2",
               [] { return graded_comodule(polynomial_quotient(q({-1, 0, 1})), {0, 1}, 2); }, {}});
  z.push_back({"z3_graded_truncated", "Q[x]/(x^3) graded by deg x = 1 over kZ3",
               [] { return graded_comodule(truncated_polynomial(3), {0, 1, 2}, 3); }, {}});
  z.push_back({"trivial_2", "Q[x]/(x^2) with the trivial kZ2 coaction",
               [] { return trivial_coaction(truncated_polynomial(2), group_algebra(cyclic_group(2))); }, {}});
  z.push_back({"trivial_q_kz2", "Q with the trivial kZ2 coaction",
               [] { return trivial_coaction(scalars(), group_algebra(cyclic_group(2))); }, {}});
  z.push_back({"unit_trivial", "the one-dimensional Hopf algebra coacting on itself",
               [] { return regular_comodule(group_algebra(cyclic_group(1))); }, {}});
  std::sort(z.begin(), z.end(), [](const ZooEntry& a, const ZooEntry& b) { return a.name < b.name; });
  return z;
}

}  // namespace

const std::vector<ZooEntry>& zoo() {
  static const std::vector<ZooEntry> entries = make_zoo();
  return entries;
}

const ZooEntry* find_zoo(const std::string& name) {
  for (const ZooEntry& e : zoo())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace qb
