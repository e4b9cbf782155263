#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace artin {

enum class ParseErrorKind {
  Syntax,
  DuplicateVertex,
  LabelTooSmall,
  NonIntegerLabel,
  InfiniteLabel,
  UnknownEndpoint,
  SelfLoop,
  DuplicateEdge,
  EmptyGraph,
};

std::string_view to_string(ParseErrorKind kind);

// Raised by the graph readers. Line numbers are 1-based; line 0 means the
// input had no line structure (JSON input).
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

enum class PreconditionKind {
  UnknownVertex,
  NotAClique,
  EmptyClique,
  CliqueGraph,
  JoinGraph,
  TooFewVertices,
  NotRightAngled,
  InvalidPath,
  NegativeRadius,
  UnknownFormat,
};

std::string_view to_string(PreconditionKind kind);

// An operation was called on input outside its domain (e.g. asking for a
// loxodromic witness on a clique).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(PreconditionKind kind, const std::string& detail);

  PreconditionKind kind() const noexcept { return kind_; }

 private:
  PreconditionKind kind_;
};

}  // namespace artin
