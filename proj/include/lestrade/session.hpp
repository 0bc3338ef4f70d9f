#ifndef LESTRADE_SESSION_HPP
#define LESTRADE_SESSION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lestrade/term.hpp"

namespace lestrade {

// A justified rewrite rule.  Pattern and target variables live in the
// negative namespace so they can never collide with renamed bound variables.
struct RewriteRule {
    std::string witness;
    Entity pattern;
    Entity target;
};

using RuleList = std::vector<RewriteRule>;

struct SavedTheory {
    long decl_serial = 0;
    long ns_serial = 0;
    Frame move0;
};

struct LookupResult {
    Sort sort;
    int distance = 0;   // 0 = next move
    long age = 0;
};

// The whole mutable state of one Lestrade session: the stack of moves with
// their names, the parallel rewrite-rule lists, serial counters, saved-move
// and saved-theory registries, and feature toggles.  Moves are indexed
// bottom-up: moves[0] is move 0, moves.back() is the next move.
class Session {
public:
    std::vector<Frame> moves;
    std::vector<std::string> move_names;
    std::vector<RuleList> rewrites;
    long decl_serial = 0;
    long ns_serial = 0;

    // keyed by the full name path (next move first, "0" last)
    std::map<std::vector<std::string>, Frame> saved_moves;
    std::map<std::vector<std::string>, RuleList> saved_rewrites;
    std::map<std::string, SavedTheory> saved_theories;

    bool show_implicit = true;
    bool rewriting_on = true;
    bool implicit_on = true;

    // Sinks installed by the interface; errors set the batch breakout flag
    // there.  Defaults collect quietly for library/test use.
    std::function<void(const std::string&)> on_error;
    std::function<void(const std::string&)> on_message;
    std::function<void(const std::string&)> on_display; // declared identifier
    std::vector<std::string> collected_errors;

    // instrumentation for the property suites: every application whose sort
    // is computed, and every define body after rewriting
    std::function<void(const Entity&, const EntitySort&)> on_app_sorted;
    std::function<void(const Entity&)> on_define_body;

    Session() { clear_all(); }

    void error(const std::string& msg) {
        collected_errors.push_back(msg);
        if (on_error) on_error(msg);
    }
    void message(const std::string& msg) {
        if (on_message) on_message(msg);
    }
    void display(const std::string& name) {
        if (on_display) on_display(name);
    }

    long new_serial() { return ++decl_serial; }
    long new_nameserial() { return ++ns_serial; }

    int depth() const { return static_cast<int>(moves.size()); }
    Frame& next_move() { return moves.back(); }
    const Frame& next_move() const { return moves.back(); }
    Frame& last_move() { return moves[moves.size() - 2]; }
    const Frame& last_move() const { return moves[moves.size() - 2]; }

    // search the moves top-down for an identifier declared as an entity or
    // an abstraction; distance 0 is the next move
    std::optional<LookupResult> lookup(const std::string& name) const;
    // age of the declaration; 0 marks definitions
    std::optional<long> declaration_age(const std::string& name) const;
    // entry in the next move only
    const FrameEntry* next_move_entry(const std::string& name) const;
    bool is_next_move_variable(const std::string& name) const;
    bool is_next_move_defined(const std::string& name) const;

    // --- lifecycle -------------------------------------------------------
    // all return false (and report) on the documented error conditions
    bool open_move(const std::string& name);
    bool close_move();
    bool save_moves(const std::string& name);
    bool clear_current(const std::string& name);
    std::string list_openable() const;
    std::string list_clearable() const;
    void save_theory(const std::string& name);
    bool load_theory(const std::string& name);
    void clear_all();

    std::string default_open_name() const { return std::to_string(depth()); }
    std::string default_clear_name() const { return std::to_string(depth() - 1); }

    // append a declaration entry at the next or last move
    void add_to_next(FrameEntry e) { next_move().entries.push_back(std::move(e)); }
    void add_to_last(FrameEntry e) { last_move().entries.push_back(std::move(e)); }

    // move name of the move holding a declaration at the given distance from
    // the next move: ":name" for non-default names, "" otherwise
    std::string move_name_suffix(int distance) const;
    bool path_is_default(const std::vector<std::string>& names) const;

    std::vector<std::string> name_path() const;     // next move first ... "0"
    std::vector<std::string> parent_path() const;   // last move first ... "0"
};

// Replaces the next move for the duration of a scope (the argument-list
// check in construct/define runs against a restricted context).
class TempNextMove {
public:
    TempNextMove(Session& s, Frame temp) : ses_(s), saved_(std::move(s.next_move())) {
        ses_.next_move() = std::move(temp);
    }
    ~TempNextMove() { ses_.next_move() = std::move(saved_); }
    TempNextMove(const TempNextMove&) = delete;
    TempNextMove& operator=(const TempNextMove&) = delete;

private:
    Session& ses_;
    Frame saved_;
};

bool is_reserved_word(const std::string& s);

} // namespace lestrade

#endif
