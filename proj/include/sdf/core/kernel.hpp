#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdf/core/errors.hpp"
#include "sdf/core/types.hpp"

namespace sdf {

/// Built-in kernel densities, all with bounded support.
enum class KernelType {
  box,           // 1 on (-1/2, 1/2]
  triangular,    // 1 - |t| on [-1, 1]
  epanechnikov,  // 3/4 (1 - t^2) on [-1, 1]
};

inline std::string_view kernel_name(KernelType type) {
  switch (type) {
    case KernelType::box: return "box";
    case KernelType::triangular: return "triangular";
    case KernelType::epanechnikov: return "epanechnikov";
  }
  return "unknown";
}

inline std::optional<KernelType> parse_kernel(std::string_view name) {
  if (name == "box") return KernelType::box;
  if (name == "triangular") return KernelType::triangular;
  if (name == "epanechnikov") return KernelType::epanechnikov;
  return std::nullopt;
}

template <typename Scalar>
Scalar kernel_weight(KernelType type, Scalar t) {
  switch (type) {
    case KernelType::box:
      return (t > Scalar(-0.5) && t <= Scalar(0.5)) ? Scalar(1) : Scalar(0);
    case KernelType::triangular: {
      const Scalar a = t < Scalar(0) ? -t : t;
      return a <= Scalar(1) ? Scalar(1) - a : Scalar(0);
    }
    case KernelType::epanechnikov:
      return (t >= Scalar(-1) && t <= Scalar(1)) ? Scalar(0.75) * (Scalar(1) - t * t) : Scalar(0);
  }
  return Scalar(0);
}

/// Kernel w with integer bandwidth k >= 1.
class KernelSpec {
 public:
  KernelSpec(KernelType type, Count bandwidth) : type_(type), bandwidth_(bandwidth) {
    if (bandwidth < 1) throw ArgumentError("kernel: bandwidth must be at least 1");
  }

  KernelType type() const { return type_; }
  Count bandwidth() const { return bandwidth_; }

  bool operator==(const KernelSpec&) const = default;

 private:
  KernelType type_;
  Count bandwidth_;
};

/// Nonzero discrete weights w(l / k), keyed by the cell offset l = j - i.
template <typename Scalar>
struct KernelTap {
  Count offset;
  Scalar weight;
};

template <typename Scalar = double>
std::vector<KernelTap<Scalar>> kernel_taps(const KernelSpec& spec) {
  // Every catalog kernel vanishes outside [-1, 1].
  const Count k = spec.bandwidth();
  std::vector<KernelTap<Scalar>> taps;
  for (Count l = -k - 1; l <= k + 1; ++l) {
    const Scalar w = kernel_weight(spec.type(), Scalar(l) / Scalar(k));
    if (w != Scalar(0)) taps.push_back({l, w});
  }
  return taps;
}

/// sum over l of (1/k) w(l/k); tends to 1 as k grows.
template <typename Scalar = double>
Scalar kernel_riemann_mass(const KernelSpec& spec) {
  detail::CompensatedSum<Scalar> acc;
  for (const auto& tap : kernel_taps<Scalar>(spec)) acc.add(tap.weight);
  return acc.value() / Scalar(spec.bandwidth());
}

}  // namespace sdf
