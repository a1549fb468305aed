#ifndef EQUICAT_ERRORS_HPP
#define EQUICAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equicat {

// All validation and arithmetic failures carry a stable machine-readable
// code plus a human-readable message naming the offending cell.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, const std::string& code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace equicat

#endif
