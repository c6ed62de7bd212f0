#pragma once

#include <iosfwd>
#include <string>

#include "zmono/surface.hpp"

namespace zmono {

// The "trig" face-list format: UTF-8 text, '#' starts a comment running to the
// end of the line, every non-blank line holds exactly three whitespace
// separated vertex labels.  The writer emits faces in ascending canonical
// order, one per line.

Triangulation read_trig(std::istream& in);
Triangulation read_trig_file(const std::string& path);
Triangulation parse_trig(const std::string& text);

std::string to_trig(const Triangulation& t);
void write_trig_file(const Triangulation& t, const std::string& path);

}  // namespace zmono
