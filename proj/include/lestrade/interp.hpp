#ifndef LESTRADE_INTERP_HPP
#define LESTRADE_INTERP_HPP

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "lestrade/render.hpp"
#include "lestrade/session.hpp"

namespace lestrade {

// Command dispatch, the interactive processor and batch file execution with
// logging.  Commands are echoed to the log indented by move depth;
// responses appear as ">> " comment lines, which makes every log
// re-executable as a source file.
class Interp {
public:
    explicit Interp(std::ostream& console = std::cout, std::istream& input = std::cin);
    ~Interp();

    Session& session() { return ses_; }
    Pretty& pretty() { return pretty_; }

    // execute one command line (no trailing newline)
    void execute_line(const std::string& line);

    // run src.lti logging to log.lti; clears the session first, stops at
    // the first error, saves the theory under the source name, and (at
    // depth zero) drops into the interactive loop
    void run_file(const std::string& src, const std::string& log);
    // interactive loop, optionally logging
    void repl(const std::string& logname);

    bool had_error() const { return had_error_; }
    bool breakout() const { return breakout_; }
    // suppress the interactive loop after run_file (batch harnesses)
    bool interactive_after_file = true;

private:
    Session ses_;
    Pretty pretty_;
    std::ostream& console_;
    std::istream& input_;
    std::unique_ptr<std::ofstream> log_;
    std::string theory_name_;
    std::string log_name_;
    std::string src_name_;
    bool greeted_ = false;
    bool breakout_ = false;
    bool had_error_ = false;
    int file_depth_ = 0;

    void banner();
    void say(const std::string& msg);        // system message, logged as comments
    void say_error(const std::string& msg);  // system message + breakout
    void say_warning(const std::string& msg);
    void emit_response(const std::string& text); // ">> "-prefixed pretty block
    void echo_command(const std::string& line, bool extra_newline);
    void log_raw(const std::string& text);
    void show_declaration(const std::string& name);

    void dispatch(const std::string& line, const std::vector<std::string>& toks);
    void do_logical(const std::string& line, const std::vector<std::string>& toks);
    void run_file_inner(const std::string& src, const std::string& log);
};

} // namespace lestrade

#endif
