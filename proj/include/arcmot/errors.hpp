#pragma once

#include <stdexcept>
#include <string>

namespace arcmot {

// Error classes map to stable CLI exit codes; keep the set small.
enum class ErrorCode {
    Parse,         // malformed input text or job spec          (exit 2)
    Precondition,  // mathematical precondition violated        (exit 3)
    Budget,        // configured resource budget exceeded       (exit 4)
    Verification,  // verification / cross-check mismatch       (exit 5)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline Error parse_error(const std::string& what) { return Error(ErrorCode::Parse, what); }
inline Error precondition_error(const std::string& what) { return Error(ErrorCode::Precondition, what); }
inline Error budget_error(const std::string& what) { return Error(ErrorCode::Budget, what); }
inline Error verification_error(const std::string& what) { return Error(ErrorCode::Verification, what); }

}  // namespace arcmot
