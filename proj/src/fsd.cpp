#include "benford/fsd.hpp"

#include <cmath>

namespace benford {

const std::array<double, 9>& benford_expected() {
  static const std::array<double, 9> p = [] {
    std::array<double, 9> v{};
    for (int d = 1; d <= 9; ++d) {
      v[d - 1] = std::log10(1.0 + 1.0 / static_cast<double>(d));
    }
    return v;
  }();
  return p;
}

}  // namespace benford
