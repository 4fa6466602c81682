#pragma once

#include <stdexcept>
#include <string>

namespace helix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hemisphere structure of a loop matches none of the known cases.
class MalformedLoop : public Error {
 public:
  using Error::Error;
};

/// A chord construction was asked for on a loop of length 3 or 4.
class NotSpiral : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

/// A chord family's untouched boundary points do not form two runs of 3.
class MalformedFamilies : public Error {
 public:
  using Error::Error;
};

/// Simplex enumeration would exceed the configured budget.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace helix
