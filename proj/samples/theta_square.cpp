// theta_E8^2 - (1/9) E4 theta_E8|T_-(2) vanishes at q^0; dividing by Delta gives
// the weak form phi_-4_2 of weight -4 and index 2.

#include <cstdlib>
#include <iostream>

#include "e8jac/jacobi.hpp"

using namespace e8jac;

int main(int argc, char** argv) {
  const int order = argc > 1 ? std::atoi(argv[1]) : 3;
  const auto th = theta_e8(order + 1);
  const auto t2 = hecke_t_minus(theta_e8(2 * order + 2), 2);
  const auto num = jf_mul(th, th) - jf_scale(t2, eisenstein(4, order + 1)) * ratio(1, 9);

  std::cout << "theta|T_-(2), q^0: " << display_text(t2[0]) << "\n";
  std::cout << "numerator, q^0:    " << (num[0].is_zero() ? std::string("0") : display_text(num[0])) << "\n";

  const auto phi = jf_div_modular(num, delta(order + 1));
  std::cout << "quotient: weight " << phi.weight() << ", index " << phi.index() << "\n";
  for (int n = 0; n <= phi.order(); ++n) std::cout << "  q^" << n << ": " << display_text(phi[n]) << "\n";
  std::cout << "classified: " << to_string(classify(phi).kind) << "\n";
}
