#pragma once

#include <stdexcept>
#include <string>

namespace cmpart {

/// Raised on violated preconditions and unsupported parameter regimes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmpart
