#include "lestrade/interp.hpp"

#include "lestrade/checker.hpp"
#include "lestrade/implicit.hpp"
#include "lestrade/parser.hpp"
#include "lestrade/rewrite.hpp"

namespace lestrade {

namespace {

std::string strip_leading_spaces(const std::string& s) {
    std::size_t i = s.find_first_not_of(" \t");
    if (i == std::string::npos) return "";
    return s.substr(i);
}

std::string strip_cr(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    return s;
}

} // namespace

Interp::Interp(std::ostream& console, std::istream& input)
    : console_(console), input_(input) {
    ses_.on_error = [this](const std::string& m) {
        had_error_ = true;
        say(m + "\n>> Hit return to continue");
        breakout_ = true;
    };
    ses_.on_message = [this](const std::string& m) { say(m); };
    ses_.on_display = [this](const std::string& name) { show_declaration(name); };
}

Interp::~Interp() = default;

void Interp::log_raw(const std::string& text) {
    if (log_ && log_->is_open()) *log_ << text;
}

void Interp::say(const std::string& msg) {
    console_ << "\nInspector Lestrade says:  " << msg << "\n\n";
    log_raw("\n>> Inspector Lestrade says:  " + msg + "\n\n");
}

void Interp::say_error(const std::string& msg) { ses_.error(msg); }

void Interp::say_warning(const std::string& msg) { say(msg); }

void Interp::banner() {
    say("\n>>   Welcome to the Lestrade Type Inspector,\n"
        ">>    reimplementation in C++\n");
}

void Interp::emit_response(const std::string& text) {
    int depth_indent = 5 * (ses_.depth() - 2);
    std::vector<std::string> lines = pretty_.wrap(text, depth_indent);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        console_ << (i == 0 ? "\n" : "") << lines[i] << "\n";
        log_raw((i == 0 ? "\n>> " : ">>   ") + lines[i] + "\n");
    }
    log_raw("\n");
    console_ << "\n";
}

void Interp::show_declaration(const std::string& name) {
    emit_response(render_declaration(ses_, name));
}

void Interp::echo_command(const std::string& line, bool extra_newline) {
    std::string indent(static_cast<std::size_t>(5 * (ses_.depth() - 2)), ' ');
    log_raw(indent + strip_leading_spaces(line) + "\n");
    if (extra_newline) log_raw("\n");
}

void Interp::execute_line(const std::string& line) {
    std::vector<std::string> toks = tokenize(strip_cr(line));
    dispatch(strip_cr(line), toks);
}

void Interp::dispatch(const std::string& line, const std::vector<std::string>& toks) {
    if (toks.empty()) return;
    const std::string& a = toks[0];
    auto arg_or = [&](std::size_t i, const std::string& dflt) {
        return toks.size() > i && !toks[i].empty() ? toks[i] : dflt;
    };

    if (a == "readfile" && toks.size() >= 3) {
        ++file_depth_;
        run_file_inner(toks[1], toks[2]);
        return;
    }
    if (a == "declare" || a == "construct" || a == "define" || a == "rewritec" ||
        a == "rewrited") {
        do_logical(line, toks);
        return;
    }
    if (a == "open") {
        echo_command(line, true);
        ses_.open_move(toks.size() > 1 && !toks[1].empty() ? toks[1]
                                                           : ses_.default_open_name());
        return;
    }
    if (a == "close") {
        echo_command(line, true);
        ses_.close_move();
        return;
    }
    if (a == "save") {
        echo_command(line, true);
        ses_.save_moves(arg_or(1, ses_.move_names.back()));
        return;
    }
    if (a == "clearcurrent") {
        ses_.clear_current(arg_or(1, ses_.default_clear_name()));
        echo_command(line, true);
        return;
    }
    if (a == "load") {
        echo_command(line, true);
        ses_.load_theory(arg_or(1, ""));
        return;
    }
    if (a == "foropen") {
        say("\n\n" + ses_.list_openable());
        return;
    }
    if (a == "forclearcurrent") {
        say("\n\n" + ses_.list_clearable());
        return;
    }
    if (a == "showdec" && toks.size() > 1) {
        auto found = ses_.lookup(toks[1]);
        if (!found) say_error(toks[1] + " is not declared");
        else show_declaration(toks[1]);
        return;
    }
    if (a == "showall" || a == "showrecent" || a == "showdecs") {
        int lo = a == "showall" ? 0 : ses_.depth() - 2;
        std::string out;
        for (int i = ses_.depth() - 1; i >= lo; --i) {
            out += "Move " + std::to_string(i) + ses_.move_name_suffix(ses_.depth() - 1 - i) +
                   ":\n";
            for (const FrameEntry& e : ses_.moves[i].entries)
                out += "  " + render_argument(ses_, e.binder) + ":" +
                       render_sort(ses_, reindex_for_record(e.sort)) + "\n";
        }
        emit_response(out);
        return;
    }
    if (a == "displayrewrites") {
        say(render_rewrites(ses_));
        return;
    }
    if (a == "showimplicit") {
        ses_.show_implicit = true;
        return;
    }
    if (a == "hideimplicit") {
        ses_.show_implicit = false;
        return;
    }
    if (a == "comment" || a == "%") {
        echo_command(line, true);
        console_ << line << "\n";
        return;
    }
    if (a == "comment1" || a == "%%") {
        echo_command(line, false);
        console_ << line;
        return;
    }
    if (a == ">> " || a == ">>") return; // transient comment, not re-logged
    if (a == "clearall") {
        echo_command(line, false);
        greeted_ = false;
        ses_.clear_all();
        return;
    }
    if (a == "basic") {
        echo_command(line, false);
        ses_.rewriting_on = false;
        ses_.implicit_on = false;
        return;
    }
    if (a == "explicit") {
        echo_command(line, false);
        ses_.rewriting_on = true;
        ses_.implicit_on = false;
        return;
    }
    if (a == "fullversion") {
        echo_command(line, false);
        ses_.rewriting_on = true;
        ses_.implicit_on = true;
        return;
    }
    if (a == "pause") {
        say("Pausing in " + log_name_ + ":\n>>  type lines or type quit to resume");
        echo_command(line, false);
        repl(" ");
        return;
    }
    if (a == "parsetest" && toks.size() > 1) {
        Parser p(ses_, tokenize(toks[1]));
        Argument t = p.parse_terms();
        say(render_argument(ses_, t));
        if (t.is_entity()) say(render_entity_sort(ses_, entity_sort_of(ses_, t.ent)));
        return;
    }
    if (a == "parsetest2" && toks.size() > 1) {
        Parser p(ses_, tokenize(toks[1]));
        say(render_entity_sort(ses_, p.parse_entity_sort()));
        return;
    }
    if (a.empty()) return;
    say_error("Line is not a Lestrade command");
}

void Interp::do_logical(const std::string& line, const std::vector<std::string>& toks) {
    const std::string& a = toks[0];
    if (toks.size() < 3) {
        say_error("Line is not a Lestrade command");
        return;
    }
    std::string name = toks[1];
    Parser p(ses_, std::vector<std::string>(toks.begin() + 2, toks.end()));

    if (a == "declare") {
        EntitySort sort = p.parse_entity_sort();
        if (!p.done_or_blank()) say_warning("Declaration line not completely read:  " + name);
        echo_command(line, false);
        cmd_declare(ses_, name, sort);
        return;
    }
    if (a == "construct") {
        std::vector<Argument> args = p.parse_open_arglist();
        EntitySort sort = p.parse_entity_sort();
        if (!p.done_or_blank())
            say_warning("Construction line not completely read:  " + p.peek());
        echo_command(line, false);
        std::vector<std::string> names;
        for (const Argument& x : args) {
            if (x.is_abst()) names.push_back(x.abst.name);
            else if (x.is_entity() && x.ent.is_atom()) names.push_back(x.ent.id.name);
            else names.push_back("?!?!");
        }
        cmd_construct(ses_, name, names, sort);
        return;
    }
    if (a == "define") {
        std::vector<Argument> args = p.parse_open_arglist();
        Argument body = p.parse_terms();
        if (!body.is_entity()) {
            say_error("Sorry, cannot define something as an abstraction");
            return;
        }
        if (!p.done_or_blank())
            say_warning("Definition line not completely read:  " + p.peek());
        echo_command(line, false);
        std::vector<std::string> names;
        for (const Argument& x : args) {
            if (x.is_abst()) names.push_back(x.abst.name);
            else if (x.is_entity() && x.ent.is_atom()) names.push_back(x.ent.id.name);
            else names.push_back("?!?!");
        }
        cmd_define(ses_, name, names, body.ent);
        return;
    }
    // rewritec / rewrited
    std::vector<Argument> args = p.parse_open_arglist();
    std::string witness = p.at_end() ? "" : p.peek();
    if (!p.at_end()) ++p.pos;
    if (!p.done_or_blank())
        say_warning((a == "rewritec"
                         ? std::string("Rewrite construction line not completely read:  ")
                         : std::string("Rewrite demonstration line not completely read:  ")) +
                    p.peek());
    echo_command(line, false);
    if (a == "rewritec") cmd_rewritec(ses_, name, args, witness);
    else cmd_rewrited(ses_, name, args, witness);
}

void Interp::run_file(const std::string& src, const std::string& log) {
    file_depth_ = 0;
    run_file_inner(src, log);
}

void Interp::run_file_inner(const std::string& src, const std::string& log) {
    breakout_ = false;
    theory_name_ = src;
    src_name_ = src;
    log_name_ = log;
    ses_.clear_all();
    greeted_ = false;

    std::ifstream in(src + ".lti");
    if (!in.is_open()) {
        had_error_ = true;
        console_ << "Cannot open " << src << ".lti\n";
        return;
    }
    if (!log.empty()) {
        log_ = std::make_unique<std::ofstream>(log + ".lti");
    }
    if (!greeted_) {
        banner();
        greeted_ = true;
    }
    std::string line;
    while (true) {
        if (breakout_ || !std::getline(in, line)) break;
        if (strip_cr(line) == "quit") break;
        execute_line(line);
    }
    breakout_ = false;
    say("Done reading " + src + " to " + log +
        ":\n>>  type lines or type quit to exit interface\n\nquit\n");
    ses_.save_theory(theory_name_);
    if (log_ && log_->is_open()) log_->flush();
    if (file_depth_ == 0) {
        if (interactive_after_file) repl("");
    } else {
        --file_depth_;
    }
}

void Interp::repl(const std::string& logname) {
    if (!logname.empty() && logname != " ")
        log_ = std::make_unique<std::ofstream>(logname + ".lti");
    if (!greeted_) {
        banner();
        greeted_ = true;
    }
    std::string line;
    while (std::getline(input_, line)) {
        if (strip_cr(line) == "quit") {
            if (logname != " ") log_raw("quit");
            say("Bye!");
            if (log_ && log_->is_open()) log_->flush();
            return;
        }
        execute_line(line);
    }
}

} // namespace lestrade
