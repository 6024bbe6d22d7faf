#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ore {

/// Base class of every error raised by the library.
class OreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values from different coefficient contexts were combined.
class ContextMismatch : public OreError {
 public:
  ContextMismatch() : OreError("operands belong to different scalar contexts") {}
};

/// Inversion of zero or of a non-unit in a ring without division.
class NotInvertible : public OreError {
 public:
  using OreError::OreError;
};

/// The requested computation is not available for this coefficient structure.
class Unsupported : public OreError {
 public:
  using OreError::OreError;
};

/// A precondition on the mathematical input does not hold.
class InvalidInput : public OreError {
 public:
  using OreError::OreError;
};

class ParseError : public OreError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : OreError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SingularMatrix : public OreError {
 public:
  using OreError::OreError;
};

/// A degenerate step (repeated root) where a non-degenerate LLCM trace is required.
class DegenerateTrace : public OreError {
 public:
  using OreError::OreError;
};

/// The Bezout chain z_i = z^{p_{i-1}(z)} is undefined because p_{step-1}(z) = 0.
class BezoutChainBroken : public OreError {
 public:
  explicit BezoutChainBroken(std::size_t step)
      : OreError("z is a root of p_" + std::to_string(step - 1)), step_(step) {}

  /// 1-based index i of the factor (z_i - y_i) that could not be formed.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace ore
