#include <stdexcept>
#include <vector>

#include "wrightfn/wright.hpp"

namespace wrightfn {

// W(-n, m | z) = 1/Gamma(m) (d/dxi)^(m-1) exp(xi + z xi^n) at xi = 0, i.e. the
// xi^(m-1) coefficient of exp(xi) * exp(z xi^n). Multiplying the truncated
// series sum_i xi^i/i! and sum_j z^j xi^(n j)/j! gives
//
//   W(-n, m | z) = sum_{j : n j <= m-1} z^j / (j! (m-1-n j)!).
std::vector<double> residue_polynomial(int n, int m) {
  if (n < 1) throw std::invalid_argument("residue_polynomial requires n >= 1");
  if (m < 1) throw std::invalid_argument("residue_polynomial requires m >= 1");

  // inv_fact[i] = 1/i!, underflowing gracefully for large i.
  std::vector<double> inv_fact(static_cast<std::size_t>(m));
  inv_fact[0] = 1.0;
  for (int i = 1; i < m; ++i) inv_fact[i] = inv_fact[i - 1] / i;

  std::vector<double> coeffs(static_cast<std::size_t>(m), 0.0);
  const int top = m - 1;
  for (int j = 0; static_cast<long long>(n) * j <= top; ++j) {
    coeffs[j] = inv_fact[j] * inv_fact[top - n * j];
  }
  return coeffs;
}

}  // namespace wrightfn
