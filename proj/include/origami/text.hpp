#pragma once

#include <string>

#include "origami/cover.hpp"
#include "origami/group.hpp"
#include "origami/surface.hpp"

namespace origami {

// Origami text format:
//   n: 3            (or: n: countable staircase)
//   sigma: (1,2)
//   tau: (1,3)
// Cycle lines may omit fixed points; blank lines and # comments are skipped.
// ParseError carries line and column of the first offending character;
// out-of-range or repeated indices raise SemanticError with the line.
Origami parse_origami_text(const std::string& text);

// Canonical text for an origami: explicit fixed points, cycles sorted by
// minimal element, trailing newline.  Countable origamis must be builtins.
std::string render_origami_text(const Origami& o);

// Group specifications:
//   Z | Z^k | F_r            free abelian / free groups
//   Z/n | Z/2xZ/2 | S3 | D4 | Q8 | trivial
//   perm: (1,2); (1,3)       finite permutation group from generators
Group parse_group_spec(const std::string& spec);

// One group element in the notation matching the group's kind: permutation
// cycles with () for the identity, integer tuples like (1,0) (a bare integer
// when the rank is 1), or words over a..z with uppercase inverses and e for
// the empty word.
GroupElem parse_group_elem(const Group& g, const std::string& text);

// Voltage files: one assignment per line,
//   h <square> <element>
//   v <square> <element>
// with # comments; assigning the same edge twice is an error.
VoltageAssignment parse_voltage_file(const Group& g, const std::string& text);

}  // namespace origami
