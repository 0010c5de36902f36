#ifndef RESOLVEDIM_ERRORS_HPP
#define RESOLVEDIM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace resolvedim {

enum class ErrorCode {
    Disconnected,
    SelfLoop,
    DuplicateEdge,
    BadCertificate,
    DomainError,
    BudgetExceeded,
    NotHamiltonianCycle,
    VerificationFailed,
    ImproperColoring,
    NotOuterplanar,
    NotMaximalPlanar,
    ColoringNotFound,
    RepairFailed,
    MissingCertificate,
    TooLarge,
    DegeneracyViolated,
    BadInput,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// VerificationFailed with the unresolved vertex pair attached. A witness of
/// (-1,-1) means the constructed set resolves but exceeds the theorem bound.
class VerificationError : public Error {
public:
    VerificationError(const std::string& message, std::pair<int, int> witness)
        : Error(ErrorCode::VerificationFailed, message), witness_(witness) {}

    std::pair<int, int> witness() const { return witness_; }

private:
    std::pair<int, int> witness_;
};

} // namespace resolvedim

#endif
