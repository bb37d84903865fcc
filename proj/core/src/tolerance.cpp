#include "amgm/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amgm/errors.hpp"

namespace amgm {

void Tolerance::validate() const {
  auto show = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  if (!std::isfinite(relative) || !(relative > 0.0)) {
    throw ParameterError("tolerance: relative must be finite and > 0, got " +
                         show(relative));
  }
  if (!std::isfinite(absolute) || !(absolute >= 0.0)) {
    throw ParameterError("tolerance: absolute must be finite and >= 0, got " +
                         show(absolute));
  }
}

double Tolerance::allowance(double scale) const noexcept {
  scale = std::abs(scale);
  if (scale < 1e-300) return absolute;
  return std::max(relative * scale, absolute);
}

}  // namespace amgm
