#pragma once

#include <stdexcept>
#include <string>

namespace pogroup {

enum class Err {
  ShapeMismatch,
  InvalidDescriptor,
  NotDirected,
  NotComDirected,
  NotApplicable,
  Unsupported,
  NotFound,
  NotFoundWithinBudget,
  InvalidWitness,
  SolverFailed,
  NoRuleApplies,
  ConstructionFailed,
  DensityRequired,
  AbelianRequired,
  NcdpWitnessUnavailable,
  WrdpWitnessUnavailable,
  UnknownCase,
  Parse,
  Usage,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

/// Parse failure with an exact byte offset into the input text.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, std::string expected, std::string found)
      : Error(Err::Parse, "offset " + std::to_string(offset) + ": expected " + expected +
                              ", found " + found),
        offset_(offset), expected_(std::move(expected)), found_(std::move(found)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

} // namespace pogroup
