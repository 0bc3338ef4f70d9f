#ifndef LESTRADE_CHECKER_HPP
#define LESTRADE_CHECKER_HPP

#include <string>
#include <vector>

#include "lestrade/session.hpp"
#include "lestrade/term.hpp"

namespace lestrade {

// Sort of an entity term; errors yield EntitySort::error() after reporting
// the innermost mismatch.
EntitySort entity_sort_of(Session& ses, const Entity& e);
Sort argument_sort_of(Session& ses, const Argument& a);

// Dependent matching of an argument list against an abstraction frame
// (renamed fresh first): stepwise sort comparison and substitution; the
// final output sort has next-move definitions expanded.
EntitySort match_apply(Session& ses, const Frame& frame, const std::vector<Argument>& args,
                       bool silent = false);

// Instantiate the final-entry body of a frame on an argument list (no sort
// checks; callers guarantee the list was already checked).
Entity instantiate_body(Session& ses, const Frame& frame, const std::vector<Argument>& args);

// One-step definitional expansion of an application whose head is defined
// (at any move); other entities pass through unchanged.
Entity expand_definition(Session& ses, const Entity& e);
// A defined abstraction appearing as an argument expands to its sort read
// as a lambda term.
Argument expand_argument(Session& ses, const Argument& a);

// Equality of entities up to rewriting and definitional expansion
// (rewrite-left, rewrite-right, expand-left, expand-right).
bool equal_entities(Session& ses, const Entity& a, const Entity& b);
bool equal_entity_sorts(Session& ses, const EntitySort& a, const EntitySort& b);
bool equal_sorts(Session& ses, bool exact, const Sort& a, const Sort& b);
bool equal_arguments(Session& ses, const Argument& a, const Argument& b);

// that p requires p: prop, in tau requires tau: type
bool check_entity_sort(Session& ses, const EntitySort& s);

// declaration checking: every identifier with namespace 0 resolves in the
// given direction (entity vs abstraction)
bool decl_check(Session& ses, const Entity& e);
bool decl_check(Session& ses, const EntitySort& s);
bool decl_check(Session& ses, const Argument& a);
bool decl_check(Session& ses, const Frame& f);
bool decl_check(Session& ses, const Sort& s);

// an argument-list entry as recorded for a named next-move variable: the
// declared sort trivially expanded
FrameEntry world_item(Session& ses, const std::string& name);
// the expanded (implicit-augmented) frame for a list of argument names
Frame argument_frame(Session& ses, const std::vector<std::string>& names);

// command semantics; report errors through the session and return success
bool cmd_declare(Session& ses, const std::string& name, const EntitySort& sort);
bool cmd_construct(Session& ses, const std::string& name,
                   const std::vector<std::string>& argnames, const EntitySort& sort);
bool cmd_define(Session& ses, const std::string& name,
                const std::vector<std::string>& argnames, const Entity& body);

} // namespace lestrade

#endif
