#ifndef LESTRADE_REWRITE_HPP
#define LESTRADE_REWRITE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lestrade/session.hpp"
#include "lestrade/term.hpp"

namespace lestrade {

// Match substitution environment: pattern variables bound at most once;
// merging conflicting bindings fails unless the values are equal.
class Binding {
public:
    const std::vector<std::pair<Argument, Argument>>& pairs() const { return pairs_; }
    const Argument* find(const Argument& var) const;
    // insert with conflict check; false on disagreement
    bool bind(Session& ses, const Argument& var, const Argument& value);
    bool merge(Session& ses, const Binding& other);

private:
    std::vector<std::pair<Argument, Argument>> pairs_;
};

// Pattern match of a recorded rule pattern against a term.  With head_rw
// set, the term is head-rewritten before comparing application heads
// (proper subterms are rewritten before a match is accepted); the top-level
// invocation passes head_rw = false.
std::optional<Binding> match_pattern(Session& ses, bool head_rw, const Entity& pattern,
                                     const Entity& term);

// Apply the first applicable rule: lists of the last move and below, each
// scanned front to back (front = most recently introduced); next-move rules
// never fire.  No match (or feature off) leaves the term unchanged.
Entity rewrite_once(Session& ses, const Entity& term);
// iterate rewriting at the root to fixpoint
Entity head_rewrite(Session& ses, const Entity& term);
// rewrite argument subterms bottom-up, then the root, re-descending after
// each root change, to fixpoint
Entity full_rewrite(Session& ses, const Entity& term);

struct RewriteSpec {
    std::vector<Argument> prefix; // the variable arguments before P
    Argument predicate;           // P, a variable of sort [(x:tau) => (---:prop)]
    Entity pattern;
    Entity target;
};

// Split an argument list into (prefix, P, pattern, target) and check the
// side conditions; empty on failure (callers report).
std::optional<RewriteSpec> validate_rewrite_args(Session& ses, const std::vector<Argument>& args);

bool cmd_rewritec(Session& ses, const std::string& name, const std::vector<Argument>& args,
                  const std::string& witness);
bool cmd_rewrited(Session& ses, const std::string& name, const std::vector<Argument>& args,
                  const std::string& witness);

// "witness:  pattern := target" lines for every move below the next
std::string render_rewrites(const Session& ses);

} // namespace lestrade

#endif
