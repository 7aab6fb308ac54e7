#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "honeycomb/rational.hpp"

namespace honeycomb {

enum class ErrorCode {
  DIMENSION_MISMATCH,
  NOT_DECREASING,
  INVALID_HONEYCOMB,
  OUT_OF_CONE,
  INFEASIBLE_TRIPLE,
  TOO_LARGE,
  NOT_CLOCKWISE,
  NON_TRANSVERSE,
  NOT_HERMITIAN,
  PARSE_ERROR,
  NOT_INTEGRAL,
};

std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

  // OUT_OF_CONE details.
  std::optional<Rat> max_t;
  std::optional<std::string> blocking_edge;

 private:
  ErrorCode code_;
};

}  // namespace honeycomb
