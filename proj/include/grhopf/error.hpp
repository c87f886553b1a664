#pragma once

#include <stdexcept>
#include <string>

namespace grhopf {

enum class ErrorKind {
    input,     // malformed presentation / file / request
    verify,    // an axiom or certified property failed
    budget,    // enumeration budget exceeded
    internal,  // a guaranteed property failed to verify
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorKind::input, msg); }
inline Error verify_error(const std::string& msg) { return Error(ErrorKind::verify, msg); }
inline Error budget_error(const std::string& msg) { return Error(ErrorKind::budget, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorKind::internal, msg); }

}  // namespace grhopf
