#pragma once

#include <stdexcept>
#include <string>

namespace equivknot {

// Base for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rewrite or move was requested at a position where its pattern does not match.
class RewriteError : public Error {
 public:
  RewriteError(const std::string& what, std::size_t position)
      : Error(what + " (position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Malformed text input (braid words, fractions, matrices, registries).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace equivknot
