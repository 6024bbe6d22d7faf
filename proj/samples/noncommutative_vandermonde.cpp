// Vandermonde inverse and LU factors for points of the rational quaternions.
#include <iostream>

#include "ore/ore.hpp"

int main() {
  using namespace ore;
  Context<Quaternions> h{Quaternions{}};
  std::vector points{h.parse("i"), h.parse("j"), h.parse("1+k")};

  auto v = vandermonde(points);
  auto inv = inverse_vandermonde_via_F(points);
  std::cout << "V = " << v << "\n";
  std::cout << "V^-1 = " << inv.inverse << "\n";
  std::cout << "V^-1 V = I: " << std::boolalpha << (inv.inverse * v == DivMatrix<Quaternions>::identity(h, 3)) << "\n";

  auto lu = lu_vandermonde(points);
  std::cout << "Lambda = " << lu.lower << "\nU = " << lu.upper << "\n";
  std::cout << "|V|_33 = " << quasideterminant(v, 2, 2) << " = g_3(x_3) = " << inv.pivots.back() << "\n";
}
