// Error types shared by all curvesing modules.
#pragma once

#include <stdexcept>
#include <string>

namespace curvesing {

enum class ErrorCode {
    Syntax,
    NotRepresentable,
    ZeroPolynomial,
    InvalidArgument,
    ExtensionDepthExceeded,
    NotAField,
    NonReducedInput,
    CommonComponent,
    MaxDepthExceeded,
    NotConvenient,
    Degenerate,
    ModelConstructionFailed,
    MalformedGraph,
    IncompatibleTowers,
    Internal
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

// Parse failure; position is a 0-based character offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t pos, const std::string& msg)
        : Error(ErrorCode::Syntax, "syntax error at position " + std::to_string(pos) + ": " + msg),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace curvesing
