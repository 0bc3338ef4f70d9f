#include "lestrade/checker.hpp"

#include "lestrade/implicit.hpp"
#include "lestrade/render.hpp"
#include "lestrade/rewrite.hpp"
#include "lestrade/subst.hpp"

namespace lestrade {

namespace {

Entity deent(const Argument& a) {
    return a.kind == ArgKind::Ent ? a.ent : Entity::error();
}

bool is_defined_anywhere(const Session& ses, const std::string& name) {
    auto age = ses.declaration_age(name);
    return age.has_value() && *age == 0;
}

} // namespace

Sort argument_sort_of(Session& ses, const Argument& a) {
    switch (a.kind) {
    case ArgKind::Ent:
        return Sort::es(entity_sort_of(ses, a.ent));
    case ArgKind::Abst: {
        auto found = ses.lookup(a.abst.name);
        if (!found || found->sort.is_esort()) {
            ses.error("Did not find abstraction " + a.abst.name + " (argtype)");
            return Sort::es(EntitySort::error());
        }
        return found->sort;
    }
    case ArgKind::Lam:
        return Sort::as(a.lam);
    }
    return Sort::es(EntitySort::error());
}

EntitySort entity_sort_of(Session& ses, const Entity& e) {
    switch (e.kind) {
    case EntKind::Atom: {
        if (e.id.ns != 0) return EntitySort::error();
        auto found = ses.lookup(e.id.name);
        if (!found) {
            ses.error("Did not find entity " + e.id.name + " (entitytype)");
            return EntitySort::error();
        }
        if (found->sort.is_esort()) return found->sort.esort;
        // a defined nullary (D,tau) answers tau for its bare name
        const Frame& f = found->sort.frame;
        if (f.size() == 1 && f.entries[0].sort.is_esort()) return f.entries[0].sort.esort;
        ses.error("Did not find entity " + e.id.name + " (entitytype)");
        return EntitySort::error();
    }
    case EntKind::App: {
        if (e.id.ns != 0) return EntitySort::error();
        auto found = ses.lookup(e.id.name);
        if (!found || found->sort.is_esort()) {
            ses.error("Did not find abstraction " + e.id.name + " (entitytype)");
            return EntitySort::error();
        }
        EntitySort out = match_apply(ses, found->sort.frame, e.args);
        if (ses.on_app_sorted && out.kind != ESortKind::Error) ses.on_app_sorted(e, out);
        return out;
    }
    default:
        return EntitySort::error();
    }
}

EntitySort match_apply(Session& ses, const Frame& frame, const std::vector<Argument>& args,
                       bool silent) {
    Frame work = rename_namespace(ses, frame);
    std::size_t n = work.entries.size();
    if (n != args.size() + 1) return EntitySort::error();
    for (std::size_t i = 0; i < args.size(); ++i) {
        const FrameEntry& entry = work.entries[i];
        Sort actual = argument_sort_of(ses, args[i]);
        if (!equal_sorts(ses, false, entry.sort, actual)) {
            if (!silent)
                ses.error("Type " + render_sort(ses, entry.sort) + " of " +
                          render_argument(ses, entry.binder) + " does not match type " +
                          render_sort(ses, actual) + " of " + render_argument(ses, args[i]));
            return EntitySort::error();
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            work.entries[j].binder = arg_subst(ses, entry.binder, args[i], work.entries[j].binder);
            work.entries[j].sort = sort_subst(ses, entry.binder, args[i], work.entries[j].sort);
        }
    }
    const Sort& out = work.entries.back().sort;
    if (!out.is_esort()) return EntitySort::error();
    return force_expand(ses, out.esort);
}

Entity instantiate_body(Session& ses, const Frame& frame, const std::vector<Argument>& args) {
    Frame work = rename_namespace(ses, frame);
    std::size_t n = work.entries.size();
    if (n != args.size() + 1) return Entity::error();
    for (std::size_t i = 0; i < args.size(); ++i) {
        const FrameEntry& entry = work.entries[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            work.entries[j].binder = arg_subst(ses, entry.binder, args[i], work.entries[j].binder);
            work.entries[j].sort = sort_subst(ses, entry.binder, args[i], work.entries[j].sort);
        }
    }
    const FrameEntry& last = work.entries.back();
    if (last.binder.kind != ArgKind::Ent || !last.sort.is_esort()) return Entity::error();
    return last.binder.ent;
}

Entity expand_definition(Session& ses, const Entity& e) {
    if (e.kind != EntKind::App || e.id.ns != 0) return e;
    if (!is_defined_anywhere(ses, e.id.name)) return e;
    auto found = ses.lookup(e.id.name);
    if (!found || !found->sort.is_asort()) return e;
    return force_expand(ses, instantiate_body(ses, found->sort.frame, e.args));
}

Argument expand_argument(Session& ses, const Argument& a) {
    if (a.kind != ArgKind::Abst || a.abst.ns != 0) return a;
    if (!is_defined_anywhere(ses, a.abst.name)) return a;
    auto found = ses.lookup(a.abst.name);
    if (!found || !found->sort.is_asort()) return a;
    return force_expand(ses, Argument::lambda(found->sort.frame));
}

namespace {

bool equivalent_lambdas(Session& ses, const Argument& a, const Argument& b) {
    if (a.kind == ArgKind::Lam && b.kind == ArgKind::Lam) {
        if (a == b) return true;
        return equal_sorts(ses, true, Sort::as(a.lam), Sort::as(b.lam));
    }
    return a == b;
}

bool equal_entities_list(Session& ses, const std::vector<Argument>& xs,
                         const std::vector<Argument>& ys) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Argument& a = xs[i];
        const Argument& b = ys[i];
        if (a.is_entity() && b.is_entity()) {
            if (!equal_entities(ses, a.ent, b.ent)) return false;
        } else {
            if (!(a == b || equivalent_lambdas(ses, expand_argument(ses, a),
                                               expand_argument(ses, b))))
                return false;
        }
    }
    return true;
}

} // namespace

bool equal_entities(Session& ses, const Entity& a, const Entity& b) {
    if (a.is_app() && b.is_app()) {
        if (a == b) return true;
        Entity v = rewrite_once(ses, a);
        if (v != a) return equal_entities(ses, v, b);
        Entity w = rewrite_once(ses, b);
        if (w != b) return equal_entities(ses, a, w);
        Entity t = expand_definition(ses, a);
        if (t != a) return equal_entities(ses, t, b);
        Entity u = expand_definition(ses, b);
        if (u != b) return equal_entities(ses, a, u);
        return a.id == b.id && equal_entities_list(ses, a.args, b.args);
    }
    if (a.is_app()) {
        if (a == b) return true;
        Entity v = rewrite_once(ses, a);
        if (v != a) return equal_entities(ses, v, b);
        Entity t = expand_definition(ses, a);
        if (t != a) return equal_entities(ses, t, b);
        return false;
    }
    if (b.is_app()) {
        if (a == b) return true;
        Entity u = expand_definition(ses, b);
        if (u != b) return equal_entities(ses, a, u);
        return false;
    }
    return a == b;
}

bool equal_entity_sorts(Session& ses, const EntitySort& a, const EntitySort& b) {
    if (a.kind == ESortKind::Error || b.kind == ESortKind::Error) return false;
    if (a.kind == ESortKind::That && b.kind == ESortKind::That)
        return equal_entities(ses, a.ent, b.ent);
    if (a.kind == ESortKind::In && b.kind == ESortKind::In)
        return equal_entities(ses, a.ent, b.ent);
    return a.kind == b.kind && a == b;
}

bool equal_sorts(Session& ses, bool exact, const Sort& a, const Sort& b) {
    if (a.is_esort() && b.is_esort()) {
        if (a.esort.kind == ESortKind::Error || b.esort.kind == ESortKind::Error) return false;
        return a.esort == b.esort || equal_entity_sorts(ses, a.esort, b.esort);
    }
    if (a.is_asort() && b.is_asort()) {
        const std::vector<FrameEntry>& xs = a.frame.entries;
        const std::vector<FrameEntry>& ys = b.frame.entries;
        if (xs.empty() || ys.empty()) return false;
        if (xs.size() == 1 && ys.size() == 1) {
            if (!equal_sorts(ses, false, xs[0].sort, ys[0].sort)) return false;
            if (!exact) return true;
            return equal_entities(ses, deent(xs[0].binder), deent(ys[0].binder));
        }
        if (xs.size() == 1 || ys.size() == 1) return false;
        if (!equal_sorts(ses, false, xs[0].sort, ys[0].sort)) return false;
        Frame resta;
        resta.entries.assign(xs.begin() + 1, xs.end());
        Frame restb;
        restb.entries.assign(ys.begin() + 1, ys.end());
        Sort substituted = sort_subst(ses, xs[0].binder, ys[0].binder, Sort::as(resta));
        return equal_sorts(ses, exact, substituted, Sort::as(restb));
    }
    return false;
}

bool equal_arguments(Session& ses, const Argument& a, const Argument& b) {
    if (a.is_entity() && b.is_entity()) return equal_entities(ses, a.ent, b.ent);
    if (a.kind == ArgKind::Lam && b.kind == ArgKind::Lam) return equivalent_lambdas(ses, a, b);
    return a == b;
}

bool check_entity_sort(Session& ses, const EntitySort& s) {
    switch (s.kind) {
    case ESortKind::Obj:
    case ESortKind::Prop:
    case ESortKind::Type:
        return true;
    case ESortKind::That: {
        bool ok = entity_sort_of(ses, s.ent).kind == ESortKind::Prop;
        if (!ok) ses.error(render_entity(ses, s.ent) + " is not of type prop (typecheck)");
        return ok;
    }
    case ESortKind::In: {
        bool ok = entity_sort_of(ses, s.ent).kind == ESortKind::Type;
        if (!ok) ses.error(render_entity(ses, s.ent) + " is not of type 'type' (typecheck)");
        return ok;
    }
    case ESortKind::Error:
        return false;
    }
    return false;
}

bool decl_check(Session& ses, const Entity& e) {
    switch (e.kind) {
    case EntKind::Unknown:
        return true;
    case EntKind::Error:
        return false;
    case EntKind::Atom: {
        if (e.id.ns != 0) return true;
        auto found = ses.lookup(e.id.name);
        if (!found || !found->sort.is_esort()) {
            ses.error("Did not find entity " + e.id.name + " (deccheck2)");
            return false;
        }
        return true;
    }
    case EntKind::App: {
        if (e.id.ns == 0) {
            auto found = ses.lookup(e.id.name);
            if (!found || found->sort.is_esort()) {
                ses.error("Did not find abstraction " + e.id.name + " (deccheck 2)");
                return false;
            }
        }
        for (const Argument& a : e.args)
            if (!decl_check(ses, a)) return false;
        return true;
    }
    }
    return false;
}

bool decl_check(Session& ses, const EntitySort& s) {
    switch (s.kind) {
    case ESortKind::That:
    case ESortKind::In:
        return decl_check(ses, s.ent);
    case ESortKind::Error:
        return false;
    default:
        return true;
    }
}

bool decl_check(Session& ses, const Argument& a) {
    switch (a.kind) {
    case ArgKind::Ent:
        return decl_check(ses, a.ent);
    case ArgKind::Abst: {
        if (a.abst.ns != 0) return true;
        auto found = ses.lookup(a.abst.name);
        if (!found || found->sort.is_esort()) {
            ses.error("Did not find abstraction " + a.abst.name + " (deccheck3)");
            return false;
        }
        return true;
    }
    case ArgKind::Lam:
        return decl_check(ses, a.lam);
    }
    return false;
}

bool decl_check(Session& ses, const Frame& f) {
    for (const FrameEntry& e : f.entries) {
        if (!decl_check(ses, e.binder)) return false;
        if (!decl_check(ses, e.sort)) return false;
    }
    return true;
}

bool decl_check(Session& ses, const Sort& s) {
    if (s.is_esort()) return decl_check(ses, s.esort);
    return decl_check(ses, s.frame);
}

FrameEntry world_item(Session& ses, const std::string& name) {
    const FrameEntry* e = ses.next_move_entry(name);
    FrameEntry out = *e;
    out.sort = force_expand(ses, out.sort);
    return out;
}

Frame argument_frame(Session& ses, const std::vector<std::string>& names) {
    std::vector<FrameEntry> items;
    items.reserve(names.size());
    for (const std::string& n : names) items.push_back(world_item(ses, n));
    Frame out;
    out.entries = expand_argument_list(ses, std::move(items));
    return out;
}

namespace {

// rename references to dotted binders throughout a sort / entity
EntitySort dot_fix(Session& ses, const std::vector<FrameEntry>& entries, EntitySort t) {
    if (!ses.implicit_on) return t;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (is_dotted(it->binder))
            t = esort_subst(ses, arg_undot(it->binder), it->binder, t);
    }
    return t;
}

Entity dot_fix(Session& ses, const std::vector<FrameEntry>& entries, Entity t) {
    if (!ses.implicit_on) return t;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        if (is_dotted(it->binder))
            t = entity_subst(ses, arg_undot(it->binder), it->binder, t);
    }
    return t;
}

bool all_next_move_variables(Session& ses, const std::vector<std::string>& names) {
    for (const std::string& n : names)
        if (!ses.is_next_move_variable(n)) return false;
    return true;
}

bool ages_ordered(Session& ses, const std::vector<std::string>& names) {
    long prev = 0;
    bool first = true;
    for (const std::string& n : names) {
        long age = ses.next_move_entry(n)->age;
        if (!first && (prev == 0 || prev >= age)) return false;
        prev = age;
        first = false;
    }
    return true;
}

bool fresh_name(Session& ses, const std::string& name) {
    if (is_reserved_word(name) || ses.lookup(name).has_value()) {
        ses.error("Identifier " + name + " is not fresh");
        return false;
    }
    return true;
}

} // namespace

bool cmd_declare(Session& ses, const std::string& name, const EntitySort& sort) {
    if (!fresh_name(ses, name)) return false;
    if (!check_entity_sort(ses, sort)) {
        ses.error("Type check fails");
        return false;
    }
    ses.add_to_next({ses.new_serial(), Argument::entity(Entity::atom(name)), Sort::es(sort)});
    ses.display(name);
    return true;
}

bool cmd_construct(Session& ses, const std::string& name,
                   const std::vector<std::string>& argnames, const EntitySort& sort) {
    if (!all_next_move_variables(ses, argnames)) {
        ses.error("Some argument is not variable");
        return false;
    }
    if (!ages_ordered(ses, argnames)) {
        ses.error("Arguments are in the wrong order");
        return false;
    }
    Frame arglist = argument_frame(ses, argnames);
    EntitySort dotted = dot_fix(ses, arglist.entries, sort);
    if (!fresh_name(ses, name)) return false;

    EntitySort expanded = force_expand(ses, dotted);
    {
        TempNextMove guard(ses, arglist);
        bool ok = decl_check(ses, ses.next_move()) && check_entity_sort(ses, expanded);
        if (!ok) {
            ses.error(argnames.empty() ? "Type check fails in declaration of constant"
                                       : "Dependency or type check failure");
            return false;
        }
    }

    // the recorded frame: a freshly expanded argument list plus the output
    Frame record = argument_frame(ses, argnames);
    record.entries.push_back(
        {0, Argument::entity(Entity::unknown()), force_expand(ses, Sort::es(dotted))});
    Sort recorded = reindex_for_record(Sort::as(rename_namespace(ses, record)));
    ses.add_to_last({ses.new_serial(), Argument::abstraction(name), std::move(recorded)});
    ses.display(name);
    return true;
}

bool cmd_define(Session& ses, const std::string& name, const std::vector<std::string>& argnames,
                const Entity& body) {
    if (!all_next_move_variables(ses, argnames)) {
        ses.error("Some argument is not variable");
        return false;
    }
    if (!ages_ordered(ses, argnames)) {
        ses.error("Arguments are in the wrong order");
        return false;
    }
    Frame arglist = argument_frame(ses, argnames);
    Entity dotted_body = dot_fix(ses, arglist.entries, body);
    if (!fresh_name(ses, name)) return false;

    Entity expanded_body = force_expand(ses, dotted_body);
    EntitySort body_sort = dot_fix(ses, arglist.entries, force_expand(ses, entity_sort_of(ses, body)));
    {
        TempNextMove guard(ses, arglist);
        bool ok = decl_check(ses, ses.next_move()) && decl_check(ses, body_sort) &&
                  decl_check(ses, expanded_body);
        if (!ok) {
            ses.error("Type check or dependency failure");
            return false;
        }
    }

    Entity rewritten = full_rewrite(ses, expanded_body);
    if (ses.on_define_body) ses.on_define_body(rewritten);
    Frame record = argument_frame(ses, argnames);
    record.entries.push_back({0, Argument::entity(rewritten), Sort::es(body_sort)});
    Sort recorded = reindex_for_record(Sort::as(rename_namespace(ses, record)));
    ses.add_to_last({0, Argument::abstraction(name), std::move(recorded)});
    ses.display(name);
    return true;
}

} // namespace lestrade
