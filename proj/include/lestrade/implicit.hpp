#ifndef LESTRADE_IMPLICIT_HPP
#define LESTRADE_IMPLICIT_HPP

#include <utility>
#include <vector>

#include "lestrade/session.hpp"
#include "lestrade/term.hpp"

namespace lestrade {

// Candidate implicit arguments discovered in a sort: next-move variables
// under that/in, variable abstraction heads in applied position, and
// variable arguments inside applications, recursively.
std::vector<std::pair<Argument, Sort>> implicit_candidates(Session& ses, const Sort& s);

// Declaration-time expansion: insert dot-renamed copies of each entry's
// implicit candidates before it (explicit occurrences win and stay
// undotted), rename later references to the dotted name, and keep the
// dependency order sound.  Identity when the feature is off.
std::vector<FrameEntry> expand_argument_list(Session& ses, std::vector<FrameEntry> entries);

// Use-time recovery: walk the declared entries, consuming supplied
// arguments at explicit positions and inferring values for dotted ones by
// sort matching.  Failed inference surfaces as an Error argument.
// Identity passthrough when the feature is off.
std::vector<Argument> infer_arguments(Session& ses, const Frame& declared,
                                      const std::vector<Argument>& supplied);

// Recover one implicit value by co-traversing the declared sort of the next
// undotted entry and the actual sort of its supplied argument.  types1 /
// types accumulate the binder context on each side.
Argument find_implicit(Session& ses, std::vector<FrameEntry> types1, std::vector<FrameEntry> types,
                       const Argument& wanted, const Sort& wanted_sort, const Sort& declared,
                       const Sort& actual);

// Display helper: drop argument positions whose declared binder is dotted.
// Identity when show_implicit is on or the application head is namespaced.
std::vector<Argument> purge_implicit_display(const Session& ses, const Ident& head,
                                             const std::vector<Argument>& args);

} // namespace lestrade

#endif
