#pragma once

#include <stdexcept>
#include <string>

namespace khdet {

// Malformed input text (PD grammar, braid spec). Carries a 0-based byte
// offset into the input when known.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Structurally invalid data: an edge used more than twice, inconsistent
// orientations, a disconnected diagram passed to a connected-only routine.
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation refused because it would exceed the configured resource cap.
class size_cap_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed, or a postcondition failed; this is a
// bug in the engine (or an inconsistent convention), not a user error.
class internal_check_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace khdet
