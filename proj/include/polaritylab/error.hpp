#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polaritylab {

enum class ErrorCode {
  vertex_out_of_range,
  loop_rejected,
  cap_exceeded,
  malformed_header,
  truncated_body,
  trailing_garbage,
  unknown_name,
  bad_parameter,
  not_a_p4,
  not_in_class,
  unknown_id,
  unknown_claim,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace polaritylab
