#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace redwords {

/// A letter sequence failed to multiply out at minimal length.
class NotReduced : public std::invalid_argument {
 public:
  /// `position` is 1-based: the letter whose multiplication did not grow the length.
  NotReduced(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation would exceed a configured word-count or memo-size cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace redwords
