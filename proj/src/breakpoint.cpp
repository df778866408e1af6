#include "gnio/breakpoint.hpp"

namespace gnio {

std::vector<double> recover_solution(double x_last,
                                     const std::vector<BreakpointPair>& pairs) {
  const std::size_t n = pairs.size() + 1;
  std::vector<double> x(n);
  x[n - 1] = x_last;
  for (std::size_t i = n - 1; i-- > 0;) x[i] = clamp_solution(x[i + 1], pairs[i]);
  return x;
}

}  // namespace gnio
