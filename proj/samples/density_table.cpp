// rho_geo against the finite-genus density at a few scrollar directions.

#include <cstdio>

#include "quintic/polytopes.hpp"

using namespace quintic;

int main() {
  const std::vector<RationalPoint> points = {
      {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}, {Rat(1, 10), Rat(1, 5), Rat(3, 10), Rat(2, 5)},
      {Rat(1, 5), Rat(1, 5), Rat(3, 10), Rat(3, 10)}, {Rat(1, 5), Rat(1, 4), Rat(1, 4), Rat(3, 10)},
      {Rat(3, 20), Rat(1, 4), Rat(1, 4), Rat(7, 20)}, {Rat(1, 10), Rat(1, 10), Rat(1, 10), Rat(7, 10)}};
  std::printf("%-28s %10s %10s %10s %10s\n", "e-bar", "rho_geo", "g=16", "g=56", "g=96");
  for (const auto& p : points) {
    std::string label;
    for (const auto& c : p) label += (label.empty() ? "" : ",") + to_string(c);
    auto r = rho_geo_detailed(p);
    std::printf("%-28s %10s", label.c_str(), r.in_support ? to_string(r.value).c_str() : "-");
    for (int g : {16, 56, 96}) std::printf(" %10.4f", pi_geo_finite(Window::point(p), g).get_d());
    std::printf("\n");
  }
}
