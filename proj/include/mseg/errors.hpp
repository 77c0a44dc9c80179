#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mseg {

// Syntax error carrying the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Endpoints from different Z-cosets of (1/2)Z in one segment or multisegment.
class MixedCosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Segment with base above end.
class InvalidSegmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rank triangle whose inclusion-exclusion multiplicity is negative at
// (i, j): the triangle does not come from any multisegment.
class NegativeMultiplicityError : public std::runtime_error {
 public:
  NegativeMultiplicityError(const std::string& what, int i_twice, int j_twice)
      : std::runtime_error(what), i_twice_(i_twice), j_twice_(j_twice) {}

  int i_twice() const noexcept { return i_twice_; }
  int j_twice() const noexcept { return j_twice_; }

 private:
  int i_twice_;
  int j_twice_;
};

class EmptyMultisegmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request beyond a configured enumeration or partition-search cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mseg
