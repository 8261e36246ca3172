#pragma once

#include <stdexcept>
#include <string>

namespace superloop {

enum class errc {
  dimension_mismatch,
  degenerate_pivot,
  no_identity,
  degree_out_of_range,
  degree_mismatch,
  datum_mismatch,
  unsupported,
  truncation_uncertain,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc code);

/// All library failures surface as this exception; `code()` selects the
/// machine-readable class, `what()` carries the human-readable detail.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace superloop
