#pragma once

#include <stdexcept>
#include <string>

namespace latdef {

// malformed caller data: mismatched lengths, bad partitions, unreadable documents
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// structurally valid input outside a documented hypothesis of the operation;
// the message states the hypothesis that failed
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace latdef
