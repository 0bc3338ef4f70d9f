#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lestrade/checker.hpp"
#include "lestrade/render.hpp"
#include "lestrade/session.hpp"
#include "lestrade/subst.hpp"
#include "lestrade/term.hpp"

using namespace lestrade;

namespace {

Argument ent(const std::string& n, int ns = 0) { return Argument::entity(Entity::atom(n, ns)); }

Frame frame_of(std::vector<FrameEntry> es) {
    Frame f;
    f.entries = std::move(es);
    return f;
}

// independent oracle: tags in first-occurrence order from a plain
// left-to-right scan of the rendered form
std::vector<int> tags_in_order(const Session& ses, const Sort& s) {
    std::string txt = render_sort(ses, s);
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < txt.size(); ++i) {
        if (txt[i] == '_' && isdigit(static_cast<unsigned char>(txt[i + 1]))) {
            int v = 0;
            std::size_t j = i + 1;
            while (j < txt.size() && isdigit(static_cast<unsigned char>(txt[j])))
                v = v * 10 + (txt[j++] - '0');
            out.push_back(v);
        }
    }
    return out;
}

Frame random_frame(std::mt19937& rng) {
    std::uniform_int_distribution<int> nbind(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    Frame f;
    int n = nbind(rng);
    for (int i = 0; i < n; ++i) {
        std::string nm = "v" + std::to_string(i);
        Sort s = coin(rng) ? Sort::es(EntitySort::obj()) : Sort::es(EntitySort::prop());
        f.entries.push_back({i + 1, ent(nm, 1), s});
    }
    f.entries.push_back({0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())});
    return f;
}

} // namespace

TEST_CASE("identifier equality requires name and namespace") {
    CHECK(Ident{"x", 0} == Ident{"x", 0});
    CHECK(Ident{"x", 1} != Ident{"x", 0});
    CHECK(Ident{"y", 0} != Ident{"x", 0});
}

TEST_CASE("negate_namespaces fixes user scope and is an involution") {
    CHECK(negate_namespaces(Entity::atom("x", 0)) == Entity::atom("x", 0));

    Entity e = Entity::app("+", 0, {ent("m", 1), ent("n", 1)});
    Entity neg = negate_namespaces(e);
    CHECK(neg == Entity::app("+", 0, {ent("m", -1), ent("n", -1)}));

    // structural-map oracle on a deeper term from the rewriting book
    Entity deep = Entity::app(
        "assocs", 0,
        {Argument::entity(Entity::app(
            "assoc", 0,
            {Argument::entity(Entity::app(
                "+", 0,
                {ent("m", 1), Argument::entity(Entity::app(
                                  "assocs", 0,
                                  {Argument::entity(Entity::app(
                                      "+", 0, {ent("n", 1), ent("p", 1)}))}))}))}))});
    CHECK(negate_namespaces(negate_namespaces(deep)) == deep);
}

TEST_CASE("reindex_for_record renumbers tags in first-occurrence order") {
    // (17,17,42) -> (1,1,2)
    Frame f = frame_of({{1, ent("p", 17), Sort::es(EntitySort::prop())},
                        {2, ent("q", 17), Sort::es(EntitySort::prop())},
                        {3, ent("r", 42), Sort::es(EntitySort::prop())},
                        {0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())}});
    Frame out = reindex_for_record(f);
    CHECK(out.entries[0].binder == ent("p", 1));
    CHECK(out.entries[1].binder == ent("q", 1));
    CHECK(out.entries[2].binder == ent("r", 2));

    SUBCASE("all-zero tags unchanged") {
        Frame z = frame_of({{1, ent("x", 0), Sort::es(EntitySort::obj())},
                            {0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::obj())}});
        CHECK(reindex_for_record(z) == z);
    }

    SUBCASE("idempotent") { CHECK(reindex_for_record(out) == out); }
}

TEST_CASE("rename_namespace shares one fresh tag across binders") {
    Session ses;
    ses.ns_serial = 1; // the frame's tags were drawn from this counter
    // [(x_1:obj),(y_1:obj) => (---:that P(x_1,y_1))]
    Entity body = Entity::app("P", 0, {ent("x", 1), ent("y", 1)});
    Frame f = frame_of({{1, ent("x", 1), Sort::es(EntitySort::obj())},
                        {2, ent("y", 1), Sort::es(EntitySort::obj())},
                        {0, Argument::entity(Entity::unknown()),
                         Sort::es(EntitySort::that(body))}});
    Frame r = rename_namespace(ses, f);
    int tag = r.entries[0].binder.ent.id.ns;
    CHECK(tag > 1);
    CHECK(r.entries[1].binder.ent.id.ns == tag);
    const Entity& out = r.entries[2].sort.esort.ent;
    CHECK(out.args[0] == ent("x", tag));
    CHECK(out.args[1] == ent("y", tag));

    SUBCASE("result is alpha-equal to the input") {
        CHECK(alpha_equal_sorts(ses, true, Sort::as(f), Sort::as(r)));
    }
    SUBCASE("renaming twice gives alpha-equal frames") {
        Frame r2 = rename_namespace(ses, f);
        CHECK(alpha_equal_sorts(ses, true, Sort::as(r), Sort::as(r2)));
        CHECK(r.entries[0].binder.ent.id.ns != r2.entries[0].binder.ent.id.ns);
    }
}

TEST_CASE("rename_namespace is alpha-preserving on random frames") {
    Session ses;
    std::mt19937 rng(12345);
    for (int i = 0; i < 50; ++i) {
        Frame f = random_frame(rng);
        Frame r1 = rename_namespace(ses, f);
        Frame r2 = rename_namespace(ses, f);
        CHECK(alpha_equal_sorts(ses, true, Sort::as(r1), Sort::as(r2)));
    }
}

TEST_CASE("substitute replaces occurrences in sorts") {
    Session ses;
    EntitySort s = EntitySort::that(Entity::app("P", 0, {ent("x")}));
    EntitySort out = esort_subst(ses, ent("x"), ent("q"), s);
    CHECK(out == EntitySort::that(Entity::app("P", 0, {ent("q")})));
}

TEST_CASE("substituting a lambda in applied position beta-reduces") {
    Session ses;
    Frame identity = frame_of({{1, ent("z", 1), Sort::es(EntitySort::obj())},
                               {0, ent("z", 1), Sort::es(EntitySort::obj())}});
    Entity app = Entity::app("F", 0, {ent("a")});
    Entity out = entity_subst(ses, Argument::abstraction("F"), Argument::lambda(identity), app);
    CHECK(out == Entity::atom("a"));
}

TEST_CASE("substitution identity when the binder is not a next-move definition") {
    Session ses;
    Entity t = Entity::app("P", 0, {ent("x"), ent("y")});
    CHECK(entity_subst(ses, ent("x"), ent("x"), t) == t);
}

TEST_CASE("reindex after rename gives display-order tags") {
    Session ses;
    ses.ns_serial = 40;
    Frame f = frame_of(
        {{1, ent("p", 3), Sort::es(EntitySort::prop())},
         {2, ent("q", 3), Sort::es(EntitySort::prop())},
         {0, Argument::entity(Entity::unknown()),
          Sort::es(EntitySort::that(Entity::app("&", 0, {ent("p", 3), ent("q", 3)})))}});
    Sort rec = reindex_for_record(Sort::as(rename_namespace(ses, f)));
    std::vector<int> tags = tags_in_order(ses, rec);
    REQUIRE(!tags.empty());
    for (std::size_t i = 0; i < tags.size(); ++i) CHECK(tags[i] == 1);
    CHECK(render_sort(ses, rec) == "[(p_1:prop),(q_1:prop) => (---:that (p_1 & q_1))]");
}

TEST_CASE("alpha equality of sorts") {
    Session ses;
    Frame a = frame_of({{1, ent("x", 1), Sort::es(EntitySort::obj())},
                        {0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())}});
    Frame b = frame_of({{1, ent("x", 9), Sort::es(EntitySort::obj())},
                        {0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())}});
    CHECK(alpha_equal_sorts(ses, false, Sort::as(a), Sort::as(b)));
    CHECK(alpha_equal_sorts(ses, true, Sort::as(a), Sort::as(b)));

    auto mk = [&](const std::string& bind, int ns, const std::string& head) {
        return frame_of(
            {{1, ent(bind, ns), Sort::es(EntitySort::obj())},
             {0, Argument::entity(Entity::unknown()),
              Sort::es(EntitySort::that(Entity::app(head, 0, {ent(bind, ns)})))}});
    };
    // P and Q are irreducible variable abstractions at move 1
    Frame psort = frame_of({{1, ent("z", 1), Sort::es(EntitySort::obj())},
                            {0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())}});
    ses.moves[1].entries.push_back({1, Argument::abstraction("P"), Sort::as(psort)});
    ses.moves[1].entries.push_back({2, Argument::abstraction("Q"), Sort::as(psort)});
    CHECK(alpha_equal_sorts(ses, false, Sort::as(mk("x", 1, "P")), Sort::as(mk("y", 2, "P"))));
    CHECK_FALSE(alpha_equal_sorts(ses, false, Sort::as(mk("x", 1, "P")), Sort::as(mk("y", 2, "Q"))));

    SUBCASE("exact compares bodies") {
        Frame idq = frame_of({{1, ent("z", 1), Sort::es(EntitySort::prop())},
                              {0, ent("z", 1), Sort::es(EntitySort::prop())}});
        Frame idw = frame_of({{1, ent("w", 7), Sort::es(EntitySort::prop())},
                              {0, ent("w", 7), Sort::es(EntitySort::prop())}});
        CHECK(alpha_equal_sorts(ses, true, Sort::as(idq), Sort::as(idw)));
        Frame other = frame_of({{1, ent("w", 7), Sort::es(EntitySort::prop())},
                                {0, ent("z", 1), Sort::es(EntitySort::prop())}});
        CHECK_FALSE(alpha_equal_sorts(ses, true, Sort::as(idq), Sort::as(other)));
    }

    SUBCASE("esort vs asort is never equal") {
        CHECK_FALSE(alpha_equal_sorts(ses, false, Sort::es(EntitySort::prop()), Sort::as(a)));
    }
}

TEST_CASE("dependencies: transitive closure over declaration sorts") {
    Session ses;
    ses.add_to_next({ses.new_serial(), ent("p"), Sort::es(EntitySort::prop())});
    ses.add_to_next({ses.new_serial(), ent("pp"),
                     Sort::es(EntitySort::that(Entity::atom("p")))});
    std::vector<Argument> d = dependencies(ses, ent("pp"));
    REQUIRE(d.size() == 2);
    CHECK(d[0] == ent("p"));
    CHECK(d[1] == ent("pp"));

    SUBCASE("a lower-move constant has no dependencies") {
        ses.moves[0].entries.push_back({ses.new_serial(), ent("c"), Sort::es(EntitySort::prop())});
        CHECK(dependencies(ses, ent("c")).empty());
    }

    SUBCASE("abstraction variable applied to a variable") {
        Frame pnsort =
            frame_of({{1, ent("k", 2), Sort::es(EntitySort::obj())},
                      {0, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())}});
        ses.add_to_next({ses.new_serial(), Argument::abstraction("Pn"), Sort::as(pnsort)});
        ses.add_to_next({ses.new_serial(), ent("k"), Sort::es(EntitySort::obj())});
        Argument term = Argument::entity(Entity::app("Pn", 0, {ent("k")}));
        std::vector<Argument> dd = dependencies(ses, term);
        CHECK(contains_argument(dd, Argument::abstraction("Pn")));
        CHECK(contains_argument(dd, ent("k")));
    }
}
