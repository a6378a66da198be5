#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kgspin {

// An argument outside an operation's contract.
struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded. `detail` names what hit the
// cap (worst index, projected table size, ...).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& msg, std::string detail_ = "")
      : std::runtime_error(msg), detail(std::move(detail_)) {}
  std::string detail;
};

}  // namespace kgspin
