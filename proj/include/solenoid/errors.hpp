#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero scalar") {}
};

// A specialization made a denominator vanish.
class SpecializationPole : public Error {
 public:
  explicit SpecializationPole(const std::string& what) : Error(what) {}
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(const std::string& what) : Error(what) {}
};

class InvalidRep : public Error {
 public:
  explicit InvalidRep(const std::string& what) : Error(what) {}
};

// Interpolation result failed the enlarged-box re-check.
class FitMismatch : public Error {
 public:
  explicit FitMismatch(const std::string& what) : Error(what) {}
};

class RankUnstable : public Error {
 public:
  explicit RankUnstable(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace solenoid
