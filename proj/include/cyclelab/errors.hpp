#pragma once

#include <stdexcept>
#include <string>

namespace cyclelab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopRejected : public Error {
 public:
  using Error::Error;
};

class ParallelArcRejected : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class EmptyDigraph : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

class InvalidSegment : public Error {
 public:
  using Error::Error;
};

/// The pattern is a directed cycle or a single-flip cycle; no chromatic
/// threshold forces it, so extraction is refused.
class PatternNotGuaranteed : public Error {
 public:
  using Error::Error;
};

class ParameterRejected : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured vertex cap.
class SizeRejected : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclelab
