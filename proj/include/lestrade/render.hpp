#ifndef LESTRADE_RENDER_HPP
#define LESTRADE_RENDER_HPP

#include <string>

#include "lestrade/session.hpp"
#include "lestrade/term.hpp"

namespace lestrade {

// Display conventions: arity-2 abstractions with a leading entity argument
// render infix, everything else prefix; Unknown is ---, Error is ???;
// frames render as [(x:s),... => (body:t)].  Implicit argument positions
// are dropped per the session toggle.
std::string render_entity(const Session& ses, const Entity& e);
std::string render_entity_sort(const Session& ses, const EntitySort& s);
std::string render_argument(const Session& ses, const Argument& a);
std::string render_frame_body(const Session& ses, const Frame& f); // without leading '['
std::string render_sort(const Session& ses, const Sort& s);

// "name:  SORT {move K[:movename]}" over the reindexed declaration
std::string render_declaration(const Session& ses, const std::string& name);

// Deterministic wrapping: break after the first comma, colon or single
// space once `margin` characters have been consumed; five spaces of
// indentation per move depth, with extra indentation inside brackets.
// Each produced line is passed to the sink.
class Pretty {
public:
    explicit Pretty(int margin = 40) : margin_(margin) {}
    int margin() const { return margin_; }
    void set_margin(int m) { margin_ = m; }

    // wrap text into lines (no prefixes); depth_indent = 5*(depth-2)
    std::vector<std::string> wrap(const std::string& text, int depth_indent) const;

private:
    int margin_;
};

} // namespace lestrade

#endif
