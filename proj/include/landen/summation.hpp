#pragma once

#include <cmath>

namespace landen::detail {

// Neumaier variant of Kahan summation; also tracks the sum of magnitudes so
// callers can tell when the result is dominated by cancellation.
template <typename T>
class CompensatedSum {
 public:
  void add(T value) {
    const T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::abs(value);
  }

  CompensatedSum& operator+=(T value) {
    add(value);
    return *this;
  }

  [[nodiscard]] T value() const { return sum_ + compensation_; }
  [[nodiscard]] T magnitude() const { return magnitude_; }

 private:
  T sum_{0};
  T compensation_{0};
  T magnitude_{0};
};

}  // namespace landen::detail
