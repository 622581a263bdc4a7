#pragma once

#include <stdexcept>
#include <string>

namespace wgame {

/// Malformed textual input: board specs, board files, number lists, ranges.
/// Bad but well-formed parameters raise std::invalid_argument instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wgame
