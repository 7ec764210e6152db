#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diskpath {

// Token position is 1-based; 0 means "not tied to a token".
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t token_position = 0)
      : std::runtime_error(what), token_position_(token_position) {}

  std::size_t token_position() const { return token_position_; }

private:
  std::size_t token_position_;
};

class RankError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotAnAutomorphism : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotPrimitive : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Internal defect: a path step's tracked disk is missing from the fact
// table. Must be unreachable.
class CertificateGap : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace diskpath
