#ifndef LESTRADE_SUBST_HPP
#define LESTRADE_SUBST_HPP

#include <vector>

#include "lestrade/session.hpp"
#include "lestrade/term.hpp"

namespace lestrade {

// Move every binder of the frame (all but the final entry) into one fresh
// namespace drawn from the session counter, renaming occurrences in later
// entry sorts and the final entry.  Always applied before substituting into
// a frame.
Frame rename_namespace(Session& ses, const Frame& f);

// Capture-safe substitution of `to` for `from`.  Abstractions defined in the
// next move are expanded on the way (they pass out of scope when the result
// is recorded one move down); substituting a lambda for an abstraction in
// applied position beta-reduces.
Entity entity_subst(Session& ses, const Argument& from, const Argument& to, const Entity& e);
Argument arg_subst(Session& ses, const Argument& from, const Argument& to, const Argument& a);
EntitySort esort_subst(Session& ses, const Argument& from, const Argument& to, const EntitySort& s);
Sort sort_subst(Session& ses, const Argument& from, const Argument& to, const Sort& s);
// substitution mapped over frame entries; the frame itself is NOT renamed
// here (callers rename first)
Frame frame_subst(Session& ses, const Argument& from, const Argument& to, const Frame& f);

// trivial substitution used purely to force expansion of next-move
// definitions throughout a term or sort
inline Entity force_expand(Session& ses, const Entity& e) {
    Argument u = Argument::entity(Entity::unknown());
    return entity_subst(ses, u, u, e);
}
inline EntitySort force_expand(Session& ses, const EntitySort& s) {
    Argument u = Argument::entity(Entity::unknown());
    return esort_subst(ses, u, u, s);
}
inline Sort force_expand(Session& ses, const Sort& s) {
    Argument u = Argument::entity(Entity::unknown());
    return sort_subst(ses, u, u, s);
}
inline Argument force_expand(Session& ses, const Argument& a) {
    Argument u = Argument::entity(Entity::unknown());
    return arg_subst(ses, u, u, a);
}

// Alpha-equivalence of sorts, definition/rewrite-aware at entity leaves.
// With exact=true the final-entry bodies must also be equal entities
// (lambda comparison); with exact=false bodies are ignored.
bool alpha_equal_sorts(Session& ses, bool exact, const Sort& a, const Sort& b);

// Every next-move variable on which the argument depends, directly or
// through the sorts of next-move identifiers occurring in it, transitively.
// Sorted by declaration age.
std::vector<Argument> dependencies(Session& ses, const Argument& a);
std::vector<Argument> sort_dependencies(Session& ses, const Sort& s);

bool contains_argument(const std::vector<Argument>& v, const Argument& a);

} // namespace lestrade

#endif
