#pragma once

#include <stdexcept>
#include <string>

namespace codedcache {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its admissible range (bad t, K, N, demand, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A maximum matching failed to cover the side it was required to saturate.
class SaturationFailure : public Error {
 public:
  using Error::Error;
};

/// Residual vertices could not be grouped into full chain tuples.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// Byte buffers do not have the sizes the configuration implies.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A user could not recover every sub-packet of its requested file.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

/// A reconstructed file differs from the original.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& what, int user, std::size_t offset)
      : Error(what), user_(user), offset_(offset) {}
  int user() const noexcept { return user_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  int user_;
  std::size_t offset_;
};

/// The binary-field system exceeds the materialization cap.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// An analytic formula was evaluated outside the domain its bound assumes.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace codedcache
