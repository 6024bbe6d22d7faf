// Every way to write t^2 + 1 over F_4 (S = Frobenius) as a product of linear factors.
#include <iostream>

#include "ore/ore.hpp"

int main() {
  using namespace ore;
  Context<GaloisField> f4{GaloisField::f4({1, 0})};
  auto trace = llcm_set(std::vector{f4.one(), f4.parse("w")});
  const auto& f = trace.result();
  std::cout << "llcm(t - 1, t - w) = " << f << "\n";

  auto report = is_w_polynomial(f);
  std::cout << "weight " << report.weight << ", " << (report.is_wedderburn ? "W-polynomial" : "not W") << "\n";
  for (const auto& fac : enumerate_factorizations(f, report.classes)) std::cout << "  " << fac.str() << "\n";
}
