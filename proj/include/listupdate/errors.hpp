#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace listupdate {

// A request named an item that is not in the list's universe.
class NotInListError : public std::invalid_argument {
public:
  explicit NotInListError(std::uint32_t item, std::optional<std::size_t> step = std::nullopt);

  std::uint32_t item() const noexcept { return item_; }
  // 1-based index of the offending request, when raised from a sequence run.
  std::optional<std::size_t> step() const noexcept { return step_; }

private:
  std::uint32_t item_;
  std::optional<std::size_t> step_;
};

// An exact computation was asked for an instance beyond its configured size.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

} // namespace listupdate
