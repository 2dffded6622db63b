#pragma once

#include <stdexcept>
#include <string>

namespace coword {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Raised when a frequency threshold leaves no analysis words; the CLI maps
// this to its own exit code.
class EmptyVocabularyError : public Error {
  public:
    explicit EmptyVocabularyError(const std::string& message) : Error(message) {}
};

}  // namespace coword
