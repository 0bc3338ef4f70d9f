#include "lestrade/parser.hpp"

#include "lestrade/checker.hpp"
#include "lestrade/implicit.hpp"
#include "lestrade/subst.hpp"

namespace lestrade {

bool is_special_char(char c) {
    switch (c) {
    case '~': case '!': case '@': case '#': case '$': case '%': case '^': case '&':
    case '*': case '-': case '+': case '=': case '|': case ';': case '.': case '<':
    case '>': case '?': case '/':
        return true;
    default:
        return false;
    }
}

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_punct_tok(char c) { return c == ',' || c == ':' || c == '(' || c == ')'; }

} // namespace

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (i < n) {
        char c = line[i];
        if (c == ' ' || c == '\t') { ++i; continue; }
        if (c == '"') {
            out.push_back(line.substr(i + 1));
            return out;
        }
        if (is_punct_tok(c)) {
            out.push_back(std::string(1, c));
            ++i;
            continue;
        }
        if (is_upper(c) || is_lower(c) || is_digit(c)) {
            std::string tok;
            if (is_upper(c)) { tok += c; ++i; }
            while (i < n && is_lower(line[i])) { tok += line[i]; ++i; }
            while (i < n && is_digit(line[i])) { tok += line[i]; ++i; }
            out.push_back(tok);
            continue;
        }
        if (is_special_char(c)) {
            std::string tok;
            while (i < n && is_special_char(line[i])) { tok += line[i]; ++i; }
            out.push_back(tok);
            continue;
        }
        break; // a character outside every class ends the stream
    }
    return out;
}

const std::string Parser::empty_ = "";

const std::string& Parser::peek(std::size_t ahead) const {
    if (pos + ahead >= toks_.size()) return empty_;
    return toks_[pos + ahead];
}

std::size_t Parser::explicit_entry_count(const Frame& f) const {
    std::size_t n = 0;
    for (const FrameEntry& e : f.entries)
        if (!(ses_.implicit_on && is_dotted(e.binder))) ++n;
    return n;
}

namespace {

bool terminator(const std::string& t) {
    return t.empty() || t == "," || t == ":" || t == ")" || is_reserved_word(t);
}

} // namespace

Argument Parser::parse_term() {
    if (at_end()) return Argument::entity(Entity::error());
    std::string a = peek();
    if (is_reserved_word(a)) return Argument::entity(Entity::error());
    if (a == "(") {
        ++pos;
        Argument t = parse_terms();
        if (!at_end() && peek() == ")") {
            ++pos;
            return t;
        }
        pos = toks_.size();
        return Argument::entity(Entity::error());
    }
    if (a == ",") {
        ++pos;
        return parse_term();
    }
    auto found = ses_.lookup(a);
    if (!found) return Argument::entity(Entity::error());
    ++pos;
    if (found->sort.is_esort()) return Argument::entity(Entity::atom(a));

    const Frame& frame = found->sort.frame;
    std::size_t explicit_arity = explicit_entry_count(frame) - 1;
    if (explicit_arity == 0) return Argument::entity(Entity::app(a, 0, {}));
    if (terminator(peek())) return Argument::abstraction(a);
    if (explicit_arity == 1) {
        Argument arg = parse_term();
        std::vector<Argument> args = infer_arguments(ses_, frame, {arg});
        return Argument::entity(Entity::app(a, 0, std::move(args)));
    }
    if (peek() == "(") {
        ++pos;
        std::vector<Argument> open = parse_open_arglist();
        std::vector<Argument> args = infer_arguments(ses_, frame, open);
        if (!at_end() && peek() == ")") {
            ++pos;
            return curry_fix(a, std::move(args));
        }
        pos = toks_.size();
        return Argument::entity(Entity::error());
    }
    std::vector<Argument> raw = parse_arglist(explicit_arity);
    std::vector<Argument> args = infer_arguments(ses_, frame, raw);
    return Argument::entity(Entity::app(a, 0, std::move(args)));
}

Argument Parser::parse_terms() {
    if (at_end() || is_reserved_word(peek())) return Argument::entity(Entity::error());
    Argument term = parse_term();
    if (at_end()) return term;
    const std::string& next = peek();
    if (next.empty() || next == "," || next == ")" || next == "(" || next == ":" ||
        is_reserved_word(next))
        return term;
    auto found = ses_.lookup(next);
    if (!found || found->sort.is_esort()) return term;
    std::size_t explicit_arity = explicit_entry_count(found->sort.frame) - 1;
    if (explicit_arity < 2) return term;
    if (terminator(peek(1))) return term;
    ++pos; // consume the infix operator
    std::vector<Argument> rest = parse_arglist(explicit_arity - 1);
    std::vector<Argument> raw;
    raw.push_back(std::move(term));
    for (Argument& r : rest) raw.push_back(std::move(r));
    std::vector<Argument> args = infer_arguments(ses_, found->sort.frame, raw);
    return Argument::entity(Entity::app(next, 0, std::move(args)));
}

std::vector<Argument> Parser::parse_arglist(std::size_t n) {
    std::vector<Argument> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (at_end()) {
            out.push_back(Argument::entity(Entity::error()));
            return out;
        }
        out.push_back(parse_terms());
    }
    return out;
}

std::vector<Argument> Parser::parse_open_arglist() {
    std::vector<Argument> out;
    for (;;) {
        if (at_end()) return out;
        if (peek() == ":") {
            ++pos;
            return out;
        }
        if (peek() == ")") return out;
        std::size_t before = pos;
        Argument t = parse_terms();
        if (pos == before) return out; // a reserved token ends the list
        out.push_back(std::move(t));
    }
}

EntitySort Parser::parse_entity_sort() {
    if (at_end()) return EntitySort::error();
    std::string a = peek();
    if (a == "obj") { ++pos; return EntitySort::obj(); }
    if (a == "prop") { ++pos; return EntitySort::prop(); }
    if (a == "type") { ++pos; return EntitySort::type(); }
    if (a == "that" || a == "in") {
        ++pos;
        Argument t = parse_terms();
        if (!t.is_entity() || t.ent.kind == EntKind::Unknown || t.ent.kind == EntKind::Error)
            return EntitySort::error();
        return a == "that" ? EntitySort::that(t.ent) : EntitySort::in(t.ent);
    }
    return EntitySort::error();
}

// shortened parenthesized list: instantiate the frame on the given
// arguments and wrap the remaining binders as a lambda
Argument Parser::curry_fix(const std::string& name, std::vector<Argument> args) {
    auto found = ses_.lookup(name);
    if (!found || !found->sort.is_asort()) return Argument::entity(Entity::error());
    const Frame& frame = found->sort.frame;
    if (args.size() + 1 == frame.size())
        return Argument::entity(Entity::app(name, 0, std::move(args)));
    if (args.size() + 1 > frame.size()) return Argument::entity(Entity::error());

    // a primitive's body slot becomes the head applied to all binders
    Frame shape = frame;
    FrameEntry& last = shape.entries.back();
    if (last.binder.is_entity() && last.binder.ent.kind == EntKind::Unknown) {
        std::vector<Argument> binders;
        for (std::size_t i = 0; i + 1 < shape.entries.size(); ++i)
            binders.push_back(shape.entries[i].binder);
        last.binder = Argument::entity(Entity::app(name, 0, std::move(binders)));
    }

    // substitute the supplied arguments through the frame, checking sorts
    Frame work = shape;
    bool mismatch = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const FrameEntry entry = work.entries[i];
        Sort actual = argument_sort_of(ses_, args[i]);
        if (!equal_sorts(ses_, false, entry.sort, actual)) mismatch = true;
        for (std::size_t j = i + 1; j < work.entries.size(); ++j) {
            work.entries[j].binder =
                arg_subst(ses_, entry.binder, args[i], work.entries[j].binder);
            work.entries[j].sort = sort_subst(ses_, entry.binder, args[i], work.entries[j].sort);
        }
    }
    if (mismatch) return Argument::entity(Entity::error());
    Frame lam;
    lam.entries.assign(work.entries.begin() + static_cast<long>(args.size()),
                       work.entries.end());
    return Argument::lambda(rename_namespace(ses_, lam));
}

} // namespace lestrade
