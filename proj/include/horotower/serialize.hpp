#pragma once

#include <string>

#include "horotower/finite_group.hpp"
#include "horotower/presentation.hpp"
#include "horotower/tower.hpp"

namespace horotower {

// All writers emit two-space indented documents with a fixed key order, so
// parsing a dump and dumping it again reproduces the bytes.  Readers
// validate structure and throw std::invalid_argument on malformed input.

// {"genus", "cusps", "generators", "peripherals"}; peripheral words are
// arrays of signed letters, generator k appearing as +-(k+1).
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text);

// {"group", "images"}: the group's own descriptor plus one element index
// per free generator.
std::string assignment_to_json(const FiniteAssignment& rho);
FiniteAssignment assignment_from_json(const std::string& text);

// .tower.json: the base presentation followed by one record per level
// holding the generator sheet actions as image tables, the base sheet,
// and the sheet surjection onto the level before (empty at level 0).
// Reading rebuilds the tower and runs its structural validation.
std::string tower_to_json(const Tower& t);
Tower tower_from_json(const std::string& text);

}  // namespace horotower
