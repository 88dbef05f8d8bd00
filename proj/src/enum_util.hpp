#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexfair/model.hpp"

namespace lexfair::detail {

/// base^exponent, or a CapExceeded error when the result would exceed cap.
inline std::uint64_t checked_power(std::uint64_t base, int exponent,
                                   std::uint64_t cap, const char* what) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base)
      throw Error(ErrorCode::CapExceeded,
                  std::string(what) + " would enumerate more than " +
                      std::to_string(cap) + " states");
    result *= base;
  }
  if (result > cap)
    throw Error(ErrorCode::CapExceeded,
                std::string(what) + " would enumerate more than " +
                    std::to_string(cap) + " states");
  return result;
}

/// Mixed-radix odometer: digit j runs over [0, radix_j). Digit 0 advances
/// fastest, so the visit sequence matches ascending canonical allocation
/// indices (item 0 is the least significant digit).
class Odometer {
 public:
  explicit Odometer(std::vector<int> radices)
      : radices_(std::move(radices)), digits_(radices_.size(), 0) {}

  const std::vector<int>& digits() const { return digits_; }

  /// Advances to the next state; returns false after the last one. Calls
  /// moved(j, old_value, new_value) for every digit that changes.
  template <typename Moved>
  bool advance(Moved&& moved) {
    for (std::size_t j = 0; j < digits_.size(); ++j) {
      if (digits_[j] + 1 < radices_[j]) {
        moved(j, digits_[j], digits_[j] + 1);
        ++digits_[j];
        return true;
      }
      moved(j, digits_[j], 0);
      digits_[j] = 0;
    }
    return false;
  }

  /// Positions the odometer at state index k (little-endian mixed radix).
  void seek(std::uint64_t k) {
    for (std::size_t j = 0; j < digits_.size(); ++j) {
      digits_[j] = static_cast<int>(k % radices_[j]);
      k /= radices_[j];
    }
  }

 private:
  std::vector<int> radices_;
  std::vector<int> digits_;
};

}  // namespace lexfair::detail
