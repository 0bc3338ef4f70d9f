#ifndef LESTRADE_PARSER_HPP
#define LESTRADE_PARSER_HPP

#include <string>
#include <vector>

#include "lestrade/session.hpp"
#include "lestrade/term.hpp"

namespace lestrade {

// Break a line into tokens: alphanumeric identifiers (optional single
// uppercase + lowercase run + digit run), runs of special characters,
// singleton punctuation , : ( ), and the rest-of-line token after a double
// quote.  A character outside every class ends the stream.
std::vector<std::string> tokenize(const std::string& line);

bool is_special_char(char c);

// Context-sensitive parsing: identifier sorts and arities come from the
// session mid-parse.  Functions consume from `pos`; failures yield Error
// arguments and leave recovery to the caller.
class Parser {
public:
    Parser(Session& ses, std::vector<std::string> tokens)
        : ses_(ses), toks_(std::move(tokens)) {}

    std::size_t pos = 0;

    bool at_end() const { return pos >= toks_.size(); }
    const std::string& peek(std::size_t ahead = 0) const;
    bool done_or_blank() const { return at_end() || peek().empty(); }

    // one non-infix term
    Argument parse_term();
    // a full term with the infix extension
    Argument parse_terms();
    // exactly n argument terms
    std::vector<Argument> parse_arglist(std::size_t n);
    // arguments until ':', ')' or a reserved token; the colon is consumed,
    // a ')' is left in place
    std::vector<Argument> parse_open_arglist();
    EntitySort parse_entity_sort();

private:
    Session& ses_;
    std::vector<std::string> toks_;
    static const std::string empty_;

    // explicit (undotted) entry count of a declared abstraction, including
    // the final entry
    std::size_t explicit_entry_count(const Frame& f) const;
    Argument finish_application(const std::string& name);
    Argument curry_fix(const std::string& name, std::vector<Argument> args);
};

} // namespace lestrade

#endif
