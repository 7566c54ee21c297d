#pragma once

#include <stdexcept>
#include <string>

namespace hopfinv {

/// All precondition and consistency failures throw this.  `code` is a
/// stable machine-readable slug ("module/what-went-wrong"); `what()`
/// carries the human-readable detail.
class HopfError : public std::runtime_error {
 public:
  HopfError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace hopfinv
