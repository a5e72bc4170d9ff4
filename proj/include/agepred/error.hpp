#pragma once

#include <stdexcept>
#include <string>

namespace agepred {

// Error taxonomy shared by the library and the CLI. The CLI maps these onto
// its exit-code contract: validation 1, I/O 2, numeric failure 3.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace agepred
