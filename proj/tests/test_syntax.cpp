#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lestrade/checker.hpp"
#include "lestrade/parser.hpp"
#include "lestrade/render.hpp"

using namespace lestrade;
using helpers::Script;

namespace {

std::vector<std::string> toks(const std::string& s) { return tokenize(s); }

Argument parse(Session& ses, const std::string& text) {
    Parser p(ses, tokenize(text));
    return p.parse_terms();
}

std::string show(Script& s, const std::string& text) {
    return render_argument(s.ses(), parse(s.ses(), text));
}

} // namespace

TEST_CASE("tokenizer: alphanumeric shapes") {
    CHECK(toks("A 1") == std::vector<std::string>{"A", "1"});
    CHECK(toks("A1") == std::vector<std::string>{"A1"});
    CHECK(toks("Abc12") == std::vector<std::string>{"Abc12"});
    CHECK(toks("AB") == std::vector<std::string>{"A", "B"});
    CHECK(toks("ab1c") == std::vector<std::string>{"ab1", "c"});
    CHECK(toks("x10") == std::vector<std::string>{"x10"});
}

TEST_CASE("tokenizer: special runs and punctuation") {
    CHECK(toks("p&q") == std::vector<std::string>{"p", "&", "q"});
    CHECK(toks("->") == std::vector<std::string>{"->"});
    CHECK(toks("<->") == std::vector<std::string>{"<->"});
    CHECK(toks("=>>") == std::vector<std::string>{"=>>"});
    CHECK(toks("~ ~p") == std::vector<std::string>{"~", "~", "p"});
    CHECK(toks("f(x,y)") == std::vector<std::string>{"f", "(", "x", ",", "y", ")"});
    CHECK(toks("a:b") == std::vector<std::string>{"a", ":", "b"});
}

TEST_CASE("tokenizer: quote takes the rest of the line; stray bytes end it") {
    CHECK(toks("parsetest \"p & q") ==
          std::vector<std::string>{"parsetest", "p & q"});
    CHECK(toks("ab\x01rest") == std::vector<std::string>{"ab"});
    CHECK(toks("") == std::vector<std::string>{});
    CHECK(toks("   ") == std::vector<std::string>{});
}

TEST_CASE("parse_entity_sort consumes the sort forms") {
    Script s;
    s.run({"declare p prop", "declare q prop", "construct & p q : prop",
           "construct Nat : type"});
    auto sort_of = [&](const std::string& t) {
        Parser p(s.ses(), tokenize(t));
        return render_entity_sort(s.ses(), p.parse_entity_sort());
    };
    CHECK(sort_of("obj") == "obj");
    CHECK(sort_of("prop") == "prop");
    CHECK(sort_of("type") == "type");
    CHECK(sort_of("that p & q") == "that (p & q)");
    CHECK(sort_of("in Nat") == "in Nat");
    CHECK(sort_of("banana") == "error");
}

TEST_CASE("terms: prefix, infix, comma guarding, grouping") {
    Script s;
    s.run({"declare p prop", "declare q prop", "construct & p q : prop",
           "construct -> p q : prop", "declare pp that p", "declare qq that q",
           "construct Mp p q pp ss : that q", "declare ss that p -> q"});
    // Mp needed ss beforehand; redo in the right order
    Script t;
    t.run({"declare p prop", "declare q prop", "construct & p q : prop",
           "construct -> p q : prop", "declare pp that p", "declare qq that q",
           "declare ss that p -> q", "construct Mp p q pp ss : that q"});

    CHECK(show(t, "Mp p q pp ss") == "Mp(p,q,pp,ss)");
    CHECK(show(t, "p & q") == "(p & q)");
    CHECK(show(t, "p -> q & p") == "(p -> (q & p))"); // right grouping
    CHECK(show(t, "(p -> q) & p") == "((p -> q) & p)");

    SUBCASE("a comma guards an abstraction argument") {
        t.run({"open", "declare x obj", "construct P x : prop", "close",
               "construct Forall P : prop", "declare P2 that Forall P",
               "declare x obj", "construct Ui P, P2 x : that P x"});
        CHECK(show(t, "Ui P, P2 x") == "Ui(P,P2,x)");
        Argument alone = parse(t.ses(), "P,");
        CHECK(alone == Argument::abstraction("P"));
    }

    SUBCASE("unresolvable and reserved tokens fail without consuming") {
        Argument bad = parse(t.ses(), "frobnicate");
        CHECK((bad.is_entity() && bad.ent.kind == EntKind::Error));
        Argument res = parse(t.ses(), "that");
        CHECK((res.is_entity() && res.ent.kind == EntKind::Error));
    }
}

TEST_CASE("parenthesized argument lists and the prefix-operator caveat") {
    Script s;
    s.run({"declare x obj", "declare y obj", "construct pair x y : obj",
           "construct p1 x : obj"});
    // after a prefix operator, '(' opens the argument list
    CHECK(show(s, "pair (x, y)") == "(x pair y)");
    CHECK(show(s, "pair ((x pair y), y)") == "((x pair y) pair y)");
    // unary abstraction followed by '(': plain grouping
    CHECK(show(s, "p1 (pair x y)") == "p1((x pair y))");
    CHECK(show(s, "p1 pair x y") == "p1((x pair y))");

    SUBCASE("open argument lists stop at reserved words and colons") {
        Parser p(s.ses(), tokenize("x y : obj"));
        std::vector<Argument> args = p.parse_open_arglist();
        CHECK(args.size() == 2);
        CHECK(p.peek() == "obj"); // colon consumed, sort term next
    }
    SUBCASE("empty list before the colon") {
        Parser p(s.ses(), tokenize(": prop"));
        CHECK(p.parse_open_arglist().empty());
    }
}

TEST_CASE("currying: a short parenthesized list builds a lambda") {
    Script s;
    s.run({"declare x obj", "declare y obj", "construct pair x y : obj"});
    Argument cur = parse(s.ses(), "pair (x)");
    REQUIRE(cur.kind == ArgKind::Lam);
    const Frame& f = cur.lam;
    REQUIRE(f.size() == 2);
    // remaining binder y, body pair(x, y_N)
    CHECK(render_sort(s.ses(), f.entries[0].sort) == "obj");
    const Entity& body = f.entries[1].binder.ent;
    CHECK(body.id.name == "pair");
    CHECK(body.args[0] == Argument::entity(Entity::atom("x")));
    CHECK(body.args[1].ent.id.ns != 0); // the lambda's own binder

    SUBCASE("full-length parenthesized list stays a plain application") {
        Argument full = parse(s.ses(), "pair (x, y)");
        CHECK(full.is_entity());
        CHECK(full.ent.id.name == "pair");
    }

    SUBCASE("defined heads expand definitionally") {
        s.run({"open", "declare x1 obj", "declare y1 obj",
               "define swap x1 y1 : pair y1 x1", "close"});
        // inside the move: swap's currying instantiates the definiens
        Script t;
        t.run({"declare x obj", "declare y obj", "construct pair x y : obj",
               "define swap x y : pair y x"});
        Argument c = parse(t.ses(), "swap (x)");
        REQUIRE(c.kind == ArgKind::Lam);
        const Entity& b = c.lam.entries[1].binder.ent;
        CHECK(b.id.name == "pair"); // definiens, not swap(...)
    }

    SUBCASE("sort mismatch in the given prefix is an error") {
        s.run({"declare pr prop"});
        Argument c = parse(s.ses(), "pair (pr)");
        CHECK((c.is_entity() && c.ent.kind == EntKind::Error));
    }
}

TEST_CASE("print-parse round trip on explicit corpus-like terms") {
    Script s;
    s.run({"declare p prop", "declare q prop", "construct & p q : prop",
           "construct -> p q : prop", "construct ?? : prop", "define ~ p : p -> ??",
           "declare x obj", "declare y obj", "construct pair x y : obj",
           "construct p1 x : obj"});
    for (const char* txt :
         {"p & q", "(p -> q) & (q -> p)", "~ ~ p", "p1 pair x y",
          "pair ((p1 (pair x y)), y)", "(p & q) -> (q & p)"}) {
        Argument a = parse(s.ses(), txt);
        REQUIRE(a.is_entity());
        std::string printed = render_argument(s.ses(), a);
        Argument b = parse(s.ses(), printed);
        CHECK(b == a);
    }
}

TEST_CASE("parse failures leave the session unmodified") {
    Script s;
    s.run({"declare p prop"});
    std::vector<Frame> moves = s.ses().moves;
    long serial = s.ses().decl_serial;
    long ns = s.ses().ns_serial;
    s.run({"declare bad that frobnicate p"});
    CHECK(s.ses().moves == moves);
    CHECK(s.ses().decl_serial == serial);
    CHECK(s.ses().ns_serial == ns);
}

TEST_CASE("tokenizer is whitespace-insensitive between tokens") {
    std::mt19937 rng(99);
    const std::vector<std::string> pool = {"Abc", "x1", "->", "&",  "(", ")",
                                           ",",   ":",  "p",  "Q9", "~~", "obj"};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> pad(1, 3);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::string> chosen;
        std::string spaced, packed;
        for (int i = 0; i < 6; ++i) {
            const std::string& t = pool[pick(rng)];
            chosen.push_back(t);
            spaced += std::string(static_cast<std::size_t>(pad(rng)), ' ') + t;
            packed += " " + t;
        }
        CHECK(tokenize(spaced) == tokenize(packed));
        CHECK(tokenize(spaced) == chosen);
    }
}

TEST_CASE("infix requires explicit arity at least two") {
    Script s;
    s.run({"declare x obj", "construct f x : obj", "declare y obj"});
    // f has arity 1: "x f" does not read f as infix; f terminates as the
    // last argument position instead
    Argument a = parse(s.ses(), "x f");
    CHECK(a == Argument::entity(Entity::atom("x")));
}
