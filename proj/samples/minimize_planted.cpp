// Plant a (2,4,1) singularity at t=5 on a genus-2 section, hide it with a random unipotent
// change of basis, then recover the normal form and lower the genus by one.

#include <iostream>
#include <random>

#include "quintic/minimize.hpp"
#include "quintic/singularity.hpp"

using namespace quintic;

static void print_pair(const char* label, const BundlePair& bp) {
  std::cout << label << " g=" << bp.g << " e=(";
  for (int i = 0; i < 4; ++i) std::cout << bp.e[i] << (i < 3 ? "," : ")");
  std::cout << " f=(";
  for (int i = 0; i < 5; ++i) std::cout << bp.f[i] << (i < 4 ? "," : ")\n");
}

int main() {
  GfField K(101);
  BundlePair bp{2, {1, 1, 2, 2}, {2, 2, 2, 3, 3}};
  auto p = P1Point<GfField>::affine(K, K.from_int(5));

  auto planted = plant_normal_form(sample_section(bp, K, 1), p, NormalForm::type_ijk(2, 4, 1), 2);
  std::mt19937_64 rng(3);
  auto sec = act(random_unipotent(bp, K, rng), planted);
  print_pair("input     ", bp);

  auto scan = singular_scan(sec, {1, false});
  std::cout << "scan      " << to_string(scan.status) << ", " << scan.singular.size() << " singular point(s)\n";

  auto cert = minimize_at(sec, p);
  std::cout << "normal form at t=5: "
            << (cert.form.kind == NormalFormKind::TypeK ? "type K=" + std::to_string(cert.form.K)
                                                        : "(" + std::to_string(cert.form.I) + "," +
                                                              std::to_string(cert.form.J) + "," +
                                                              std::to_string(cert.form.K) + ")")
            << "\n";

  auto res = partial_normalize(sec, cert);
  print_pair("normalized", res.base);
  for (const auto& w : res.warnings) std::cout << "warning: " << w << "\n";
}
