#pragma once

#include <stdexcept>
#include <string>

namespace sqlens {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

struct EmptyDatabaseError : Error {
  using Error::Error;
};

struct InvalidSelectionError : Error {
  using Error::Error;
};

struct BackendError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct GenerationError : Error {
  using Error::Error;
};

struct SyntheticGenerationError : Error {
  using Error::Error;
};

}  // namespace sqlens
