// The extremal fin pair g=6, e=(1,2,3,4), f=(2,3,4,5,6): the a25 entry is a nonzero constant
// on every sample, and a fin-active pair with deg a25 > 0 always picks up singular points.

#include <iostream>

#include "quintic/singularity.hpp"
#include "quintic/strata.hpp"

using namespace quintic;

int main() {
  GfField K(101);
  BundlePair fin{6, {1, 2, 3, 4}, {2, 3, 4, 5, 6}};
  auto v = theorem15_check(fin);
  std::cout << "fin pair: " << to_string(v.status) << (v.fin_active ? ", fin active" : "") << "\n";

  int smooth = 0;
  for (uint64_t s = 0; s < 5; ++s) {
    auto sec = sample_section(fin, K, s);
    auto rep = singular_scan(sec, {1, true});
    std::vector<FiberPoint<GfField>> pts;
    for (const auto& sp : rep.points) pts.push_back(sp.point);
    bool minors = rep.status == ScanStatus::SmoothScanned && fin_minor_check(sec, pts);
    smooth += rep.status == ScanStatus::SmoothScanned;
    std::cout << "seed " << s << ": " << to_string(rep.status) << ", " << rep.curve_points << " points over F_101"
              << (minors ? ", fin minors vanish" : "") << "\n";
  }
  std::cout << smooth << "/5 samples smooth over F_101\n";

  auto r = counting_verdict(fin);
  std::cout << "stratum count: " << r.triples.size() << " maximal triples, " << (r.all_pass() ? "all pass" : "FAILS") << "\n";

  BundlePair off{6, {1, 2, 3, 4}, {1, 3, 4, 5, 7}};
  std::cout << "\noff-fin pair f=(1,3,4,5,7), deg a25 = " << off.d(2, 5, 1) << "\n";
  auto sec = sample_section(off, K, 0);
  for (const auto& w : fin_witnesses(sec))
    std::cout << "  a25 vanishes at (" << to_string(w.s) << ":" << to_string(w.t) << "): jacobian rank at (w, e1) = "
              << jacobian_rank_at(sec, FiberPoint<GfField>{w, {K.one(), K.zero(), K.zero(), K.zero()}}) << "\n";
}
