#pragma once

#include <stdexcept>
#include <string>

namespace dnastore {

// Received data cannot be corrected within the single-error contract.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed archive text or a file that cannot be read/written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dnastore
