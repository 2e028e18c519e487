#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class DegenerateRank : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

class NoBasisFound : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class AmbiguousSolution : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class HasBridge : public Error {
 public:
  explicit HasBridge(std::size_t edge)
      : Error("graph has a bridge: edge " + std::to_string(edge)), edge_(edge) {}
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

/// Raised by the reconstruction pipeline when the input Gram matrix cannot be
/// the flow lattice of a 2-edge-connected graph. `stage()` names the pipeline
/// step that failed.
class NotAFlowLattice : public Error {
 public:
  NotAFlowLattice(std::string stage, const std::string& detail)
      : Error("not a flow lattice (" + stage + "): " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace flowmat
