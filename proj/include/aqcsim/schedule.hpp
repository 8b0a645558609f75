#pragma once

#include <string_view>
#include <vector>

namespace aqcsim {

enum class ScheduleKind { linear, square, roundtrip };

std::string_view to_string(ScheduleKind kind);
/// Throws InvalidArgument for anything but linear|square|roundtrip.
ScheduleKind parse_schedule_kind(std::string_view name);

/// Weights of H(s) = f(s) H0 + g(s) HP.
struct Coefficients {
  double f = 0.0;
  double g = 0.0;
};

/// Interpolation between the driver H0 and the problem HP over s = t / T in
/// [0, 1]:
///   linear     f = 1 - s,          g = s
///   square     f = 1 - s^2,        g = s (2 - s)
///   roundtrip  f = 4 (s - 1/2)^2,  g = -4 s (s - 1)
/// A reversed schedule evaluates its base at 1 - s (the return path).
class Schedule {
 public:
  constexpr Schedule() = default;
  constexpr explicit Schedule(ScheduleKind kind, bool reversed = false) : kind_(kind), reversed_(reversed) {}

  static constexpr Schedule linear() { return Schedule(ScheduleKind::linear); }
  static constexpr Schedule square() { return Schedule(ScheduleKind::square); }
  static constexpr Schedule roundtrip() { return Schedule(ScheduleKind::roundtrip); }

  constexpr ScheduleKind kind() const { return kind_; }
  constexpr bool is_reversed() const { return reversed_; }
  constexpr Schedule reversed() const { return Schedule(kind_, !reversed_); }

  /// Throws InvalidArgument unless 0 <= s <= 1.
  Coefficients coefficients(double s) const;

  /// Transverse field equivalent lambda(s) = f(s) / g(s). Returns +infinity
  /// where g(s) = 0; H(s) itself stays finite there.
  double lambda(double s) const;

  /// Values of s in [0, 1] where lambda(s) = 1, ascending.
  std::vector<double> critical_points() const;

  std::string_view name() const;

  bool operator==(const Schedule&) const = default;

 private:
  ScheduleKind kind_ = ScheduleKind::linear;
  bool reversed_ = false;
};

}  // namespace aqcsim
