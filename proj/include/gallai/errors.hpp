#pragma once

#include <stdexcept>
#include <string>

namespace gallai {

enum class Errc {
  malformed_record,
  unsupported_size,
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  unknown_pattern,
  pattern_too_large,
  not_in_class,
  disconnected,
  structure_violation,
  precondition_c5,
};

// Stable identifier used in CLI error output and tests.
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gallai
