#ifndef IMPJUDGE_RENDER_HPP
#define IMPJUDGE_RENDER_HPP

#include <string>

#include "impjudge/judge.hpp"

namespace impjudge {

// Human-readable judgment. With `with_trace`, includes the full derivation
// log and the chain diagrams.
std::string render_text(const Judgment& j, bool with_trace);

// Single self-describing tree per judgment. Field names are part of the
// output contract (see README); a superset of everything the text rendering
// shows. Serialized with sorted keys, so byte-identical across runs.
std::string render_structured(const Judgment& j);

}  // namespace impjudge

#endif  // IMPJUDGE_RENDER_HPP
