#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace groupbell {

/// Base class for all groupbell errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class NotHermitian : public Error { public: using Error::Error; };
class NotUnitary : public Error { public: using Error::Error; };
class RelationViolated : public Error { public: using Error::Error; };
class NonIntegerMultiplicity : public Error { public: using Error::Error; };
class UnsupportedFamily : public Error { public: using Error::Error; };
class UnusableInitialState : public Error { public: using Error::Error; };
class MultiplicityNotSupported : public Error { public: using Error::Error; };
class SearchSpaceTooLarge : public Error { public: using Error::Error; };
class NotCyclic : public Error { public: using Error::Error; };
class MethodUnavailable : public Error { public: using Error::Error; };
class UnknownScenario : public Error { public: using Error::Error; };

/// Input validation failure. Carries a JSON pointer to the offending field.
class SchemaError : public Error {
public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

private:
  std::string pointer_;
};

}  // namespace groupbell
