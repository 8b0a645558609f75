#include "aqcsim/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aqcsim/errors.hpp"

namespace aqcsim {

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::linear: return "linear";
    case ScheduleKind::square: return "square";
    case ScheduleKind::roundtrip: return "roundtrip";
  }
  return "unknown";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "linear") return ScheduleKind::linear;
  if (name == "square") return ScheduleKind::square;
  if (name == "roundtrip") return ScheduleKind::roundtrip;
  throw InvalidArgument("unknown schedule '" + std::string(name) + "' (expected linear|square|roundtrip)");
}

Coefficients Schedule::coefficients(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw InvalidArgument("schedule parameter s=" + std::to_string(s) + " outside [0, 1]");
  if (reversed_) s = 1.0 - s;
  switch (kind_) {
    case ScheduleKind::linear: return {1.0 - s, s};
    case ScheduleKind::square: return {1.0 - s * s, s * (2.0 - s)};
    case ScheduleKind::roundtrip: return {4.0 * (s - 0.5) * (s - 0.5), -4.0 * s * (s - 1.0)};
  }
  return {};
}

double Schedule::lambda(double s) const {
  const auto c = coefficients(s);
  if (c.g == 0.0) return std::numeric_limits<double>::infinity();
  return c.f / c.g;
}

std::vector<double> Schedule::critical_points() const {
  std::vector<double> roots;
  switch (kind_) {
    case ScheduleKind::linear:
    case ScheduleKind::square: roots = {0.5}; break;
    case ScheduleKind::roundtrip: roots = {(2.0 - std::sqrt(2.0)) / 4.0, (2.0 + std::sqrt(2.0)) / 4.0}; break;
  }
  if (reversed_) {
    for (auto& r : roots) r = 1.0 - r;
    std::reverse(roots.begin(), roots.end());
  }
  return roots;
}

std::string_view Schedule::name() const {
  if (!reversed_) return to_string(kind_);
  switch (kind_) {
    case ScheduleKind::linear: return "linear-reversed";
    case ScheduleKind::square: return "square-reversed";
    case ScheduleKind::roundtrip: return "roundtrip-reversed";
  }
  return "unknown";
}

}  // namespace aqcsim
