#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "golden.hpp"
#include "lestrade/interp.hpp"
#include "lestrade/checker.hpp"
#include "lestrade/subst.hpp"
#include "lestrade/render.hpp"

#ifndef CORPUS_DIR
#define CORPUS_DIR "."
#endif

using namespace lestrade;

namespace {

std::string replay(const std::string& book, bool* had_error = nullptr) {
    std::string log = std::string("replay_") + book;
    {
        std::ostringstream console;
        std::istringstream input;
        Interp interp(console, input);
        interp.interactive_after_file = false;
        interp.run_file(std::string(CORPUS_DIR) + "/" + book, log);
        if (had_error) *had_error = interp.had_error();
    } // closes the log
    std::string text = golden::read_file(log + ".lti");
    std::remove((log + ".lti").c_str());
    return text;
}

void check_book(const std::string& book, bool strip_move_tags) {
    bool had_error = true;
    std::string mine = replay(book, &had_error);
    CHECK_FALSE(had_error);
    std::string expected = golden::read_file(std::string(CORPUS_DIR) + "/" + book + ".expected");
    REQUIRE(!expected.empty());
    std::string a = golden::squash(expected, strip_move_tags);
    std::string b = golden::squash(mine, strip_move_tags);
    golden::Diff d = golden::compare_streams(a, b);
    if (!d.equal) {
        MESSAGE("book ", book, ": first difference at offset ", d.index, "\n  ", d.context);
    }
    CHECK(d.equal);
}

} // namespace

TEST_CASE("golden replay: rewriting book") { check_book("rewriting", false); }
TEST_CASE("golden replay: implicit book") { check_book("implicit", false); }
TEST_CASE("golden replay: russell book") { check_book("russell", true); }
TEST_CASE("golden replay: logic book") { check_book("logic", true); }

namespace {

// Rebuild a recorded frame as a user-namespace declaration list so it can
// serve as a temporary next move.
struct Reconstructed {
    lestrade::Frame temp_move;
    lestrade::FrameEntry final_entry;
    bool ok = false;
};

Reconstructed reconstruct(lestrade::Session& ses, const lestrade::Frame& f) {
    using namespace lestrade;
    Reconstructed out;
    if (f.entries.empty()) return out;
    Frame work = rename_namespace(ses, f);
    long n = 0;
    for (std::size_t i = 0; i + 1 < work.entries.size(); ++i) {
        FrameEntry& e = work.entries[i];
        std::string fresh = "rechk" + std::to_string(++n);
        Argument newb = e.binder.kind == ArgKind::Abst
                            ? Argument::abstraction(fresh)
                            : Argument::entity(Entity::atom(fresh));
        Argument oldb = e.binder;
        e.binder = newb;
        for (std::size_t j = i + 1; j < work.entries.size(); ++j) {
            work.entries[j].binder = arg_subst(ses, oldb, newb, work.entries[j].binder);
            work.entries[j].sort = sort_subst(ses, oldb, newb, work.entries[j].sort);
        }
        out.temp_move.entries.push_back({static_cast<long>(i + 1), newb, e.sort});
    }
    out.final_entry = work.entries.back();
    out.ok = true;
    return out;
}

} // namespace

TEST_CASE("self-consistency: every recorded declaration re-checks") {
    using namespace lestrade;
    std::ostringstream console;
    std::istringstream input;
    Interp interp(console, input);
    interp.interactive_after_file = false;
    interp.run_file(std::string(CORPUS_DIR) + "/logic", "recheck_log");
    std::remove("recheck_log.lti");
    Session& ses = interp.session();
    REQUIRE_FALSE(interp.had_error());

    int checked = 0;
    const std::vector<Frame> moves = ses.moves;
    const std::vector<std::string> names = ses.move_names;
    const std::vector<RuleList> rules = ses.rewrites;
    for (std::size_t k = 0; k < moves.size(); ++k) {
        for (const FrameEntry& decl : moves[k].entries) {
            if (!decl.sort.is_asort()) continue;
            // a declaration recorded at move k checks against moves 0..k
            // plus its own argument list as the next move
            ses.moves.assign(moves.begin(), moves.begin() + static_cast<long>(k) + 1);
            ses.move_names.assign(names.begin(), names.begin() + static_cast<long>(k) + 1);
            ses.rewrites.assign(rules.begin(), rules.begin() + static_cast<long>(k) + 1);
            Reconstructed rc = reconstruct(ses, decl.sort.frame);
            REQUIRE(rc.ok);
            ses.moves.push_back(rc.temp_move);
            ses.move_names.push_back("tmp");
            ses.rewrites.push_back({});

            CHECK(decl_check(ses, ses.next_move()));
            REQUIRE(rc.final_entry.sort.is_esort());
            CHECK(check_entity_sort(ses, rc.final_entry.sort.esort));
            // defined bodies must themselves sort-check to the output sort
            if (rc.final_entry.binder.kind == ArgKind::Ent &&
                rc.final_entry.binder.ent.kind == EntKind::App) {
                EntitySort got = entity_sort_of(ses, rc.final_entry.binder.ent);
                CHECK(equal_entity_sorts(ses, got, rc.final_entry.sort.esort));
            }
            ++checked;
        }
    }
    ses.moves = moves;
    ses.move_names = names;
    ses.rewrites = rules;
    CHECK(checked > 100);
    MESSAGE("re-checked ", checked, " recorded declarations");
}

TEST_CASE("rendering totality: recorded declarations never show error markers") {
    using namespace lestrade;
    for (const char* book : {"logic", "rewriting", "implicit", "russell"}) {
        std::ostringstream console;
        std::istringstream input;
        Interp interp(console, input);
        interp.interactive_after_file = false;
        interp.run_file(std::string(CORPUS_DIR) + "/" + book, "totality_log");
        std::remove("totality_log.lti");
        Session& ses = interp.session();
        for (const Frame& move : ses.moves) {
            for (const FrameEntry& decl : move.entries) {
                std::string txt = render_sort(ses, decl.sort);
                CHECK(txt.find("???") == std::string::npos);
                CHECK(txt.find("*?*?") == std::string::npos);
            }
        }
    }
}
