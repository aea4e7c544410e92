#ifndef DPC_ERRORS_HPP
#define DPC_ERRORS_HPP

#include <stdexcept>

namespace dpc {

// Requested work exceeds a hard-coded desk-scale cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dpc

#endif
