#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berezin {

enum class ErrorCode {
    invalid_dimension,
    invalid_point,
    zero_kernel,
    index_out_of_range,
    shape_mismatch,
    not_psd,
    numeric,
    invalid_parameter,
    empty_model,
    not_invertible,
    configuration,
    not_convex_orlicz,
    precondition_violated,
    parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code; the
/// CLI maps input-class codes to exit status 2.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace berezin
