#pragma once

#include <stdexcept>
#include <string>

namespace edgering {

// Failure categories, mapped to process exit codes by the CLI:
//   Input   -> 1  (bad graph data, bad parameters, unmet preconditions)
//   Budget  -> 2  (a configured enumeration/size cap was hit)
//   Anomaly -> 3  (an exact mathematical identity failed; indicates a bug
//                  or an instance violating an asserted theorem)
enum class ErrorKind { Input, Budget, Anomaly };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message),
          kind_(kind),
          code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error input_error(const std::string& code, const std::string& msg) {
    return Error(ErrorKind::Input, code, msg);
}
inline Error budget_error(const std::string& code, const std::string& msg) {
    return Error(ErrorKind::Budget, code, msg);
}
inline Error anomaly_error(const std::string& code, const std::string& msg) {
    return Error(ErrorKind::Anomaly, code, msg);
}

}  // namespace edgering
