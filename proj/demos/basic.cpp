// Library walkthrough: moduli, a g-vector, and the gaps for vertices of simple 6-polytopes.
#include "kfaces/kfaces.hpp"

#include <iostream>

int main() {
  using namespace kfaces;

  const unsigned d = 6;
  const MdMatrix m(d);
  for (unsigned k = 0; k < d; ++k) std::cout << "G(" << d << "," << k << ") = " << modulus_gcd(m, k) << '\n';

  const GVector g{{1, 3, 2, 1}};
  const FVector f = g_to_f(g, m);
  std::cout << "f(1,3,2,1) =";
  for (const auto& x : f.counts) std::cout << ' ' << x;
  std::cout << '\n';

  const GapReport rep = enumerate_gaps(d, 0);
  std::cout << "vertex gaps:";
  for (const auto& n : rep.gaps) std::cout << ' ' << n;
  std::cout << "\nevery vertex count above " << rep.threshold << " occurs\n";

  if (auto w = realizable_witness(d, 0, 20)) {
    std::cout << "20 vertices via g =";
    for (const auto& x : w->entries) std::cout << ' ' << x;
    std::cout << '\n';
  }
}
