#ifndef LESTRADE_TESTS_HELPERS_HPP
#define LESTRADE_TESTS_HELPERS_HPP

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "lestrade/interp.hpp"
#include "lestrade/render.hpp"

namespace helpers {

// drives the interpreter without touching the filesystem
struct Script {
    std::ostringstream console;
    std::istringstream input;
    lestrade::Interp interp{console, input};

    lestrade::Session& ses() { return interp.session(); }

    void run(std::initializer_list<const char*> lines) {
        for (const char* l : lines) interp.execute_line(l);
    }
    void run(const std::vector<std::string>& lines) {
        for (const std::string& l : lines) interp.execute_line(l);
    }

    std::string decl(const std::string& name) {
        return lestrade::render_declaration(ses(), name);
    }

    const std::vector<std::string>& errors() { return ses().collected_errors; }
    bool error_contains(const std::string& needle) {
        for (const std::string& e : errors())
            if (e.find(needle) != std::string::npos) return true;
        return false;
    }
};

inline std::string collapse_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n') out += c;
    return out;
}

} // namespace helpers

#endif
