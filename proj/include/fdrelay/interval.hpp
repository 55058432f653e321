#pragma once

#include <algorithm>

namespace fdrelay {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] bool empty() const { return !(lo <= hi); }
  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
  [[nodiscard]] double clamp(double x) const { return std::clamp(x, lo, hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace fdrelay
