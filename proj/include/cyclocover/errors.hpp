#ifndef CYCLOCOVER_ERRORS_HPP
#define CYCLOCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclocover {

enum class ErrorCode {
    MalformedLine,
    VertexOutOfRange,
    DuplicateEdge,
    SelfLoop,
    Disconnected,
    MinDegreeTooSmall,
    EvenCycleLength,
    TooManyEdges,
    InvalidSpec,
    UnknownProblemTag,
    LimitExceeded,
    InternalInvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace cyclocover

#endif // CYCLOCOVER_ERRORS_HPP
