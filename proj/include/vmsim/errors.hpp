#pragma once

#include <stdexcept>
#include <string>

namespace vmsim {

// Error categories map onto CLI exit codes: config 2, numerical 3, support 4.
enum class ErrorKind { config, numerical, support };

class SimError : public std::runtime_error {
public:
  SimError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_config(const std::string& msg) {
  throw SimError(ErrorKind::config, msg);
}
[[noreturn]] inline void throw_numerical(const std::string& msg) {
  throw SimError(ErrorKind::numerical, msg);
}
[[noreturn]] inline void throw_support(const std::string& msg) {
  throw SimError(ErrorKind::support, msg);
}

}  // namespace vmsim
