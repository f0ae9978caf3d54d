#pragma once

#include <stdexcept>
#include <string>

namespace shq {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables of the wrong shape, out-of-range entries, misplaced zero.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class IncompatiblePartition : public Error {
 public:
  IncompatiblePartition(const std::string& what, int a, int b)
      : Error(what), first(a), second(b) {}
  int first;
  int second;
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction that the surrounding theory guarantees failed anyway.
/// Raised only when the input lies outside the assumptions (or on a bug).
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace shq
