#pragma once

#include <stdexcept>
#include <string>

namespace rumflow {

// Malformed external input (files, CLI payloads, schema violations).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds a hard size cap and is refused.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rumflow
