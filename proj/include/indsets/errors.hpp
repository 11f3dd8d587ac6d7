#pragma once

#include <stdexcept>
#include <string>

namespace indsets {

/// A FamilySpec (or its ell/n) is outside the supported domain.
struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A size cap (matrix dimension, enumeration size) would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The supplied prefix does not certify a linear recurrence.
struct NoCertifiedRecurrence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No hardcoded formula exists for the requested (family, ell).
struct NotInTable : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct MalformedSequence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace indsets
