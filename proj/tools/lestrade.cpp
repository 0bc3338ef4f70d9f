#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lestrade/interp.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Lestrade type inspector"};
    app.require_subcommand(1);

    int margin = 40;
    bool batch = false;
    app.add_option("--margin", margin, "pretty-printer margin");
    app.add_flag("--batch", batch, "do not enter the interactive loop after readfile");

    std::string src, log;
    CLI::App* rf = app.add_subcommand("readfile", "execute src.lti, logging to log.lti");
    rf->add_option("src", src, "source book (without .lti)")->required();
    rf->add_option("log", log, "log file (without .lti)")->required();

    std::string ilog;
    CLI::App* iface = app.add_subcommand("interface", "interactive processor");
    iface->add_option("log", ilog, "log file (without .lti)");

    CLI11_PARSE(app, argc, argv);

    lestrade::Interp interp;
    interp.pretty().set_margin(margin);
    if (rf->parsed()) {
        interp.interactive_after_file = !batch;
        interp.run_file(src, log);
        return interp.had_error() ? 1 : 0;
    }
    interp.repl(ilog.empty() ? " " : ilog);
    return interp.had_error() ? 1 : 0;
}
