#include "berezin/error.hpp"

namespace berezin {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_dimension: return "invalid-dimension";
        case ErrorCode::invalid_point: return "invalid-point";
        case ErrorCode::zero_kernel: return "zero-kernel";
        case ErrorCode::index_out_of_range: return "index-out-of-range";
        case ErrorCode::shape_mismatch: return "shape-mismatch";
        case ErrorCode::not_psd: return "not-psd";
        case ErrorCode::numeric: return "numeric";
        case ErrorCode::invalid_parameter: return "invalid-parameter";
        case ErrorCode::empty_model: return "empty-model";
        case ErrorCode::not_invertible: return "not-invertible";
        case ErrorCode::configuration: return "configuration";
        case ErrorCode::not_convex_orlicz: return "not-convex-orlicz";
        case ErrorCode::precondition_violated: return "precondition-violated";
        case ErrorCode::parse_error: return "parse-error";
    }
    return "unknown";
}

}  // namespace berezin
