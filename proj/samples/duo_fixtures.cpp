// Monic degree-two common left multiples in non-division coefficient rings.
#include <iostream>

#include "ore/ore.hpp"

int main() {
  using namespace ore;
  Context<MatrixRing<Rationals>> m2{MatrixRing<Rationals>(Rationals{}, 2)};
  auto a = m2.parse("[[1,1],[0,1]]");
  auto b = m2.parse("[[0,0],[0,1]]");
  auto res = llcm2_exists(a, b);
  std::cout << "M_2(Q): exists = " << std::boolalpha << res.exists << " (" << res.solution.certificate << ")\n";

  Context<IntegersMod> z8{IntegersMod(8)};
  auto chain = chain_construct(std::vector{z8.from_int(1), z8.from_int(2), z8.from_int(4)});
  std::cout << "Z/8Z: common multiple " << chain.result() << "\n";
  std::cout << "Z/8Z left duo: " << is_left_duo(z8) << "\n";
}
