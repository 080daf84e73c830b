#ifndef WIREMONO_RENDER_HPP_
#define WIREMONO_RENDER_HPP_

#include <string>

#include "wiremono/monoid.hpp"

namespace wiremono {

// Two-column ASCII picture: one row per index, left points on the left,
// right points on the right, wires drawn as -, | and + paths. Circles are
// shown on a trailing `o x<count>` line.
std::string render_diagram(const SetPartition& p);
std::string render_diagram(const Matching& m);
std::string render_element(const TwistedElement& x);

}  // namespace wiremono

#endif  // WIREMONO_RENDER_HPP_
