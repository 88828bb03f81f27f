#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace sdf {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Cell counts. Totals can exceed 2^31 in large sweeps.
using Count = std::int64_t;
using Counts = Eigen::Matrix<Count, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

namespace detail {

// Neumaier-compensated running sum.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar v) {
    const Scalar t = sum_ + v;
    if (abs_(sum_) >= abs_(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const { return sum_ + carry_; }

 private:
  static Scalar abs_(Scalar v) { return v < Scalar(0) ? -v : v; }
  Scalar sum_ = Scalar(0);
  Scalar carry_ = Scalar(0);
};

template <typename Derived>
typename Derived::Scalar compensated_sum(const Eigen::DenseBase<Derived>& v) {
  CompensatedSum<typename Derived::Scalar> acc;
  for (Index i = 0; i < v.size(); ++i) acc.add(v(i));
  return acc.value();
}

}  // namespace detail
}  // namespace sdf
