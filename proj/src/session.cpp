#include "lestrade/session.hpp"

#include <algorithm>

namespace lestrade {

namespace {

// does this entry declare `name`?
bool entry_declares(const FrameEntry& e, const std::string& name) {
    if (e.binder.kind == ArgKind::Ent && e.binder.ent.is_atom())
        return e.binder.ent.id.ns == 0 && e.binder.ent.id.name == name;
    if (e.binder.kind == ArgKind::Abst)
        return e.binder.abst.ns == 0 && e.binder.abst.name == name;
    return false;
}

const FrameEntry* find_in_move(const Frame& m, const std::string& name) {
    for (const FrameEntry& e : m.entries)
        if (entry_declares(e, name)) return &e;
    return nullptr;
}

} // namespace

bool is_reserved_word(const std::string& s) {
    return s == "obj" || s == "prop" || s == "type" || s == "that" || s == "in" ||
           s == "---" || s == "???";
}

std::optional<LookupResult> Session::lookup(const std::string& name) const {
    for (int i = depth() - 1; i >= 0; --i) {
        if (const FrameEntry* e = find_in_move(moves[i], name))
            return LookupResult{e->sort, depth() - 1 - i, e->age};
    }
    return std::nullopt;
}

std::optional<long> Session::declaration_age(const std::string& name) const {
    for (int i = depth() - 1; i >= 0; --i) {
        if (const FrameEntry* e = find_in_move(moves[i], name)) return e->age;
    }
    return std::nullopt;
}

const FrameEntry* Session::next_move_entry(const std::string& name) const {
    return find_in_move(next_move(), name);
}

bool Session::is_next_move_variable(const std::string& name) const {
    const FrameEntry* e = next_move_entry(name);
    return e != nullptr && e->age != 0;
}

bool Session::is_next_move_defined(const std::string& name) const {
    const FrameEntry* e = next_move_entry(name);
    return e != nullptr && e->age == 0;
}

bool Session::path_is_default(const std::vector<std::string>& names) const {
    // a path is "default" when it is at least two long and its head is the
    // numeral index of its move
    return names.size() >= 2 && names.front() == std::to_string(names.size() - 1);
}

std::vector<std::string> Session::name_path() const {
    std::vector<std::string> p(move_names.rbegin(), move_names.rend());
    return p;
}

std::vector<std::string> Session::parent_path() const {
    std::vector<std::string> p = name_path();
    p.erase(p.begin());
    return p;
}

std::string Session::move_name_suffix(int distance) const {
    int idx = depth() - 1 - distance;
    if (idx < 0 || idx >= depth()) return "";
    const std::string& nm = move_names[idx];
    if (nm == std::to_string(idx)) return "";
    return ":" + nm;
}

bool Session::open_move(const std::string& name) {
    std::vector<std::string> cur = name_path();
    std::vector<std::string> proposed = cur;
    proposed.insert(proposed.begin(), name);
    if (path_is_default(cur) && !path_is_default(proposed)) {
        error("Cannot follow default move with named move");
        return false;
    }
    auto w = saved_moves.find(proposed);
    if (w == saved_moves.end()) {
        moves.push_back(Frame{});
        rewrites.push_back(RuleList{});
    } else {
        moves.push_back(w->second);
        auto r = saved_rewrites.find(proposed);
        rewrites.push_back(r == saved_rewrites.end() ? RuleList{} : r->second);
    }
    move_names.push_back(name);
    return true;
}

bool Session::close_move() {
    if (depth() <= 2) {
        error("Cannot undo move 1:" + move_names.back());
        return false;
    }
    moves.pop_back();
    rewrites.pop_back();
    move_names.pop_back();
    return true;
}

bool Session::save_moves(const std::string& name) {
    if (name == std::to_string(depth() - 1)) {
        error("Cannot save a move with the default numeral name");
        return false;
    }
    if (path_is_default(parent_path())) {
        error("Cannot save a default move");
        return false;
    }
    move_names.back() = name;
    // record every (path, move) pair from the next move down to move 1
    std::vector<std::string> path = name_path();
    for (int i = depth() - 1; i >= 1; --i) {
        saved_moves[path] = moves[i];
        saved_rewrites[path] = rewrites[i];
        path.erase(path.begin());
    }
    return true;
}

bool Session::clear_current(const std::string& name) {
    std::vector<std::string> parent = parent_path();
    std::vector<std::string> proposed = parent;
    proposed.insert(proposed.begin(), name);
    if (path_is_default(parent) && !path_is_default(proposed)) {
        error("Named move cannot follow a default move");
        return false;
    }
    auto w = saved_moves.find(proposed);
    if (w == saved_moves.end()) {
        next_move() = Frame{};
        rewrites.back() = RuleList{};
    } else {
        next_move() = w->second;
        auto r = saved_rewrites.find(proposed);
        rewrites.back() = r == saved_rewrites.end() ? RuleList{} : r->second;
    }
    move_names.back() = name;
    return true;
}

std::string Session::list_openable() const {
    std::string out;
    std::vector<std::string> cur = name_path();
    for (const auto& [path, mv] : saved_moves) {
        (void)mv;
        if (path.size() == cur.size() + 1 &&
            std::equal(cur.begin(), cur.end(), path.begin() + 1))
            out += path.front() + "\n";
    }
    return out;
}

std::string Session::list_clearable() const {
    std::string out;
    std::vector<std::string> parent = parent_path();
    for (const auto& [path, mv] : saved_moves) {
        (void)mv;
        if (path.size() == parent.size() + 1 &&
            std::equal(parent.begin(), parent.end(), path.begin() + 1))
            out += path.front() + "\n";
    }
    return out;
}

void Session::save_theory(const std::string& name) {
    saved_theories[name] = SavedTheory{decl_serial, ns_serial, moves[0]};
}

bool Session::load_theory(const std::string& name) {
    auto it = saved_theories.find(name);
    if (name.empty() || it == saved_theories.end()) {
        error("No such theory to load");
        return false;
    }
    moves = {it->second.move0, Frame{}};
    move_names = {"0", "1"};
    rewrites = {RuleList{}, RuleList{}};
    decl_serial = it->second.decl_serial;
    ns_serial = it->second.ns_serial;
    return true;
}

void Session::clear_all() {
    moves = {Frame{}, Frame{}};
    move_names = {"0", "1"};
    rewrites = {RuleList{}, RuleList{}};
    decl_serial = 0;
    ns_serial = 0;
}

} // namespace lestrade
