#include "lestrade/implicit.hpp"

#include <algorithm>

#include "lestrade/checker.hpp"
#include "lestrade/subst.hpp"

namespace lestrade {

namespace {

Sort argument_as_sort(Session& ses, const Argument& a) {
    // cast an argument to a sort so candidate discovery can look inside
    // embedded terms
    if (a.is_entity()) return Sort::es(EntitySort::that(a.ent));
    if (a.kind == ArgKind::Lam) return Sort::as(a.lam);
    Argument ex = expand_argument(ses, a);
    if (!(ex == a)) return argument_as_sort(ses, ex);
    return Sort::es(EntitySort::error());
}

bool is_variable_arg(Session& ses, const Argument& a) {
    if (a.is_entity() && a.ent.is_atom() && a.ent.id.ns == 0)
        return ses.is_next_move_variable(a.ent.id.name);
    if (a.is_abst() && a.abst.ns == 0) return ses.is_next_move_variable(a.abst.name);
    return false;
}

void candidates_of(Session& ses, const Sort& s, std::vector<std::pair<Argument, Sort>>& out);

void candidates_of_app(Session& ses, const Entity& app,
                       std::vector<std::pair<Argument, Sort>>& out) {
    // variable abstraction head in applied position
    if (app.id.ns == 0 && ses.is_next_move_variable(app.id.name) &&
        ses.next_move_entry(app.id.name)->sort.is_asort()) {
        Argument head = Argument::abstraction(app.id.name, app.id.ns);
        Sort hsort = argument_sort_of(ses, head);
        out.emplace_back(head, hsort);
        candidates_of(ses, hsort, out);
    }
    for (std::size_t i = 0; i < app.args.size(); ++i) {
        const Argument& x = app.args[i];
        if (is_variable_arg(ses, x)) {
            out.emplace_back(x, argument_sort_of(ses, x));
        } else {
            candidates_of(ses, argument_as_sort(ses, x), out);
        }
    }
}

void candidates_of(Session& ses, const Sort& s, std::vector<std::pair<Argument, Sort>>& out) {
    if (s.is_esort()) {
        const EntitySort& es = s.esort;
        if (es.kind != ESortKind::That && es.kind != ESortKind::In) return;
        const Entity& e = es.ent;
        if (e.is_atom() && e.id.ns == 0 && ses.is_next_move_variable(e.id.name)) {
            Sort vs = Sort::es(es.kind == ESortKind::That ? EntitySort::prop()
                                                          : EntitySort::type());
            out.emplace_back(Argument::entity(e), vs);
            return;
        }
        if (e.is_app() && !e.args.empty()) candidates_of_app(ses, e, out);
        return;
    }
    const std::vector<FrameEntry>& es = s.frame.entries;
    if (es.empty()) return;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i + 1 == es.size()) {
            if (es[i].binder.is_entity())
                candidates_of(ses, Sort::es(EntitySort::that(es[i].binder.ent)), out);
            candidates_of(ses, es[i].sort, out);
        } else {
            candidates_of(ses, es[i].sort, out);
        }
    }
}

using Entries = std::vector<FrameEntry>;
using Candidates = std::vector<std::pair<Argument, Sort>>;

Entries drop_binder(const Argument& key, Entries l) {
    l.erase(std::remove_if(l.begin(), l.end(),
                           [&](const FrameEntry& e) { return e.binder == key; }),
            l.end());
    return l;
}

Entries drop_binders(const std::vector<Argument>& keys, Entries l) {
    for (const Argument& k : keys) l = drop_binder(k, std::move(l));
    return l;
}

std::vector<Argument> dotted_copies(const std::vector<Argument>& keys) {
    std::vector<Argument> out;
    out.reserve(keys.size());
    for (const Argument& k : keys) out.push_back(arg_dot(k));
    return out;
}

Entries subst_entries(Session& ses, const Argument& from, const Argument& to, Entries l) {
    Entries out;
    out.reserve(l.size());
    for (const FrameEntry& e : l)
        out.push_back({1, arg_subst(ses, from, to, e.binder), sort_subst(ses, from, to, e.sort)});
    return out;
}

Entries increment_ages(Entries l) {
    for (FrameEntry& e : l) ++e.age;
    return l;
}

// insert dotted entries for the candidates ahead of the list, transitively
// adding the candidates of their own sorts and keeping dependencies sound
Entries add_dotted(Session& ses, const Candidates& cands, Entries l) {
    if (cands.empty()) return l;
    const auto& [var, vsort] = cands.front();
    Candidates rest(cands.begin() + 1, cands.end());
    if (l.empty()) {
        return {{1, arg_dot(var), vsort}};
    }
    long age = l.front().age;
    Entries inner = add_dotted(ses, rest, increment_ages(l));
    inner = drop_binder(arg_dot(var), drop_binder(var, std::move(inner)));
    std::vector<Argument> deps = sort_dependencies(ses, vsort);
    inner = drop_binders(deps, drop_binders(dotted_copies(deps), std::move(inner)));
    inner = subst_entries(ses, var, arg_dot(var), std::move(inner));
    Entries out;
    out.push_back({age, arg_dot(var), vsort});
    out.insert(out.end(), inner.begin(), inner.end());
    return add_dotted(ses, implicit_candidates(ses, vsort), std::move(out));
}

Entries expand_entries(Session& ses, const Entries& entries, std::size_t idx) {
    if (idx >= entries.size()) return {};
    const FrameEntry& e = entries[idx];
    Entries tail = expand_entries(ses, entries, idx + 1);

    std::vector<Argument> deps = sort_dependencies(ses, e.sort);
    tail = drop_binders(deps, drop_binders(dotted_copies(deps), std::move(tail)));

    bool named = (e.binder.is_entity() && e.binder.ent.is_atom() && e.binder.ent.id.ns == 0) ||
                 (e.binder.is_abst() && e.binder.abst.ns == 0);
    if (named) {
        Argument dotted = arg_dot(e.binder);
        tail = drop_binder(e.binder, drop_binder(dotted, std::move(tail)));
        tail = subst_entries(ses, dotted, e.binder, std::move(tail));
    }
    Entries lst;
    lst.push_back(e);
    lst.insert(lst.end(), tail.begin(), tail.end());

    Candidates cands = implicit_candidates(ses, e.sort);
    std::vector<Argument> cand_vars;
    for (const auto& [v, s] : cands) {
        (void)s;
        cand_vars.push_back(v);
    }
    lst = drop_binders(cand_vars, std::move(lst));
    for (const auto& [v, s] : cands) {
        (void)s;
        lst = subst_entries(ses, v, arg_dot(v), std::move(lst));
    }
    return add_dotted(ses, cands, std::move(lst));
}

} // namespace

std::vector<std::pair<Argument, Sort>> implicit_candidates(Session& ses, const Sort& s) {
    Candidates out;
    candidates_of(ses, s, out);
    return out;
}

std::vector<FrameEntry> expand_argument_list(Session& ses, std::vector<FrameEntry> entries) {
    if (!ses.implicit_on) return entries;
    return expand_entries(ses, entries, 0);
}

namespace {

Sort first_undotted_sort(const Entries& l) {
    for (const FrameEntry& e : l)
        if (!is_dotted(e.binder)) return e.sort;
    return Sort::es(EntitySort::error());
}

std::vector<Argument> frame_binders(const Entries& l) {
    std::vector<Argument> out;
    out.reserve(l.size());
    for (const FrameEntry& e : l) out.push_back(e.binder);
    return out;
}

// match a frame's entries against pre-typed (binder, sort) pairs, silently;
// error sort on failure
EntitySort silent_match_entries(Session& ses, Entries frame, const Entries& supplied) {
    if (frame.size() != supplied.size() + 1) return EntitySort::error();
    for (std::size_t i = 0; i < supplied.size(); ++i) {
        if (!equal_sorts(ses, false, frame[i].sort, supplied[i].sort)) return EntitySort::error();
        for (std::size_t j = i + 1; j < frame.size(); ++j) {
            frame[j].binder = arg_subst(ses, frame[i].binder, supplied[i].binder, frame[j].binder);
            frame[j].sort = sort_subst(ses, frame[i].binder, supplied[i].binder, frame[j].sort);
        }
    }
    if (!frame.back().sort.is_esort()) return EntitySort::error();
    return force_expand(ses, frame.back().sort.esort);
}

bool initial_segment(const std::vector<Argument>& xs, const std::vector<Argument>& of) {
    if (xs.size() > of.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!(xs[i] == of[i])) return false;
    return true;
}

Entries take_entries(std::size_t n, const Entries& l) {
    Entries out(l.begin(), l.begin() + std::min(n, l.size()));
    return out;
}

Argument error_arg() { return Argument::entity(Entity::error()); }

bool is_error_arg(const Argument& a) {
    return a.is_entity() && a.ent.kind == EntKind::Error;
}

} // namespace

Argument find_implicit(Session& ses, std::vector<FrameEntry> types1, std::vector<FrameEntry> types,
                       const Argument& wanted, const Sort& wanted_sort, const Sort& declared,
                       const Sort& actual) {
    auto that_of = [](const Entity& e) { return Sort::es(EntitySort::that(e)); };

    // normalize in/in to that/that when the declared side is an application
    if (declared.is_esort() && declared.esort.kind == ESortKind::In &&
        declared.esort.ent.is_app() && actual.is_esort() && actual.esort.kind == ESortKind::In) {
        return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                             that_of(declared.esort.ent), that_of(actual.esort.ent));
    }

    if (declared.is_esort() && declared.esort.kind == ESortKind::That &&
        declared.esort.ent.is_app() && actual.is_esort() &&
        actual.esort.kind == ESortKind::That) {
        const Entity& dapp = declared.esort.ent;
        const Entity& act = actual.esort.ent;
        Argument head = Argument::abstraction(dapp.id.name, dapp.id.ns);
        bool wanted_is_head = wanted == head;

        if (act.is_app() && !dapp.args.empty() && !act.args.empty()) {
            // (a) fully abstract occurrence: arguments form an initial
            // segment of the context binders in binding order
            if (wanted_is_head && initial_segment(dapp.args, frame_binders(types1))) {
                Entries ctx = take_entries(dapp.args.size(), types);
                EntitySort out = silent_match_entries(
                    ses, wanted_sort.is_asort() ? wanted_sort.frame.entries : Entries{}, ctx);
                if (out.kind != ESortKind::Error) {
                    if (frame_binders(ctx) == act.args)
                        return Argument::abstraction(act.id.name, act.id.ns);
                    Frame lam;
                    lam.entries = ctx;
                    lam.entries.push_back({0, Argument::entity(act), Sort::es(out)});
                    return Argument::lambda(lam);
                }
            }
            // (b) concrete arguments matching the aligned application
            if (wanted_is_head) {
                Entries typed;
                for (const Argument& y : act.args)
                    typed.push_back({1, y, argument_sort_of(ses, y)});
                EntitySort via = silent_match_entries(
                    ses, wanted_sort.is_asort() ? wanted_sort.frame.entries : Entries{}, typed);
                EntitySort whole = entity_sort_of(ses, act);
                if (whole.kind != ESortKind::Error && via.kind != ESortKind::Error &&
                    equal_entity_sorts(ses, via, whole))
                    return Argument::abstraction(act.id.name, act.id.ns);
            }
            if (!(dapp.id == act.id)) {
                Entity t = expand_definition(ses, dapp);
                if (t != dapp) {
                    Argument v = find_implicit(ses, types1, types, wanted, wanted_sort,
                                               that_of(t), actual);
                    if (!is_error_arg(v)) return v;
                    Entity u = expand_definition(ses, act);
                    if (u == act) return error_arg();
                    return find_implicit(ses, std::move(types1), std::move(types), wanted,
                                         wanted_sort, declared, that_of(u));
                }
                Entity u = expand_definition(ses, act);
                if (u == act) return error_arg();
                return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                                     declared, that_of(u));
            }
            // heads agree: align argument positions
            if (wanted == dapp.args[0]) return act.args[0];
            Argument v = find_implicit(ses, types1, types, wanted, wanted_sort,
                                       argument_as_sort(ses, dapp.args[0]),
                                       argument_as_sort(ses, act.args[0]));
            if (!is_error_arg(v)) return v;
            Entity drest = dapp;
            drest.args.erase(drest.args.begin());
            Entity arest = act;
            arest.args.erase(arest.args.begin());
            return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                                 that_of(drest), that_of(arest));
        }

        // declared side applied, actual side arbitrary: synthesize a lambda
        // over the aligned context
        if (dapp.is_app()) {
            if (wanted_is_head && initial_segment(dapp.args, frame_binders(types1))) {
                Entries ctx = take_entries(dapp.args.size(), types);
                EntitySort out = silent_match_entries(
                    ses, wanted_sort.is_asort() ? wanted_sort.frame.entries : Entries{}, ctx);
                if (out.kind != ESortKind::Error) {
                    Frame lam;
                    lam.entries = ctx;
                    lam.entries.push_back({0, Argument::entity(act), Sort::es(out)});
                    return Argument::lambda(lam);
                }
            }
            Entity t = expand_definition(ses, dapp);
            if (t != dapp)
                return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                                     that_of(t), actual);
            Entity u = expand_definition(ses, act);
            if (u != act)
                return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                                     declared, that_of(u));
            return error_arg();
        }
    }

    // direct occurrence under that / in
    if (declared.is_esort() && actual.is_esort()) {
        const EntitySort& d = declared.esort;
        const EntitySort& c = actual.esort;
        if (d.kind == ESortKind::That && c.kind == ESortKind::That) {
            if (wanted == Argument::entity(d.ent)) return Argument::entity(c.ent);
            return error_arg();
        }
        if (d.kind == ESortKind::In && c.kind == ESortKind::In) {
            if (wanted == Argument::entity(d.ent)) return Argument::entity(c.ent);
            return error_arg();
        }
        return error_arg();
    }

    if (declared.is_asort() && actual.is_asort()) {
        const Entries& xs = declared.frame.entries;
        const Entries& ys = actual.frame.entries;
        if (xs.empty() || ys.empty()) return error_arg();
        if (xs.size() == 1 && ys.size() == 1) {
            Argument v = find_implicit(ses, types1, types, wanted, wanted_sort, xs[0].sort,
                                       ys[0].sort);
            if (!is_error_arg(v)) return v;
            Entity db = xs[0].binder.is_entity() ? xs[0].binder.ent : Entity::error();
            Entity ab = ys[0].binder.is_entity() ? ys[0].binder.ent : Entity::error();
            return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                                 that_of(db), that_of(ab));
        }
        if (xs.size() == 1 || ys.size() == 1) return error_arg();
        Argument v = find_implicit(ses, types1, types, wanted, wanted_sort, xs[0].sort, ys[0].sort);
        if (!is_error_arg(v)) return v;
        types1.push_back(xs[0]);
        types.push_back(ys[0]);
        Frame dr;
        dr.entries.assign(xs.begin() + 1, xs.end());
        Frame ar;
        ar.entries.assign(ys.begin() + 1, ys.end());
        return find_implicit(ses, std::move(types1), std::move(types), wanted, wanted_sort,
                             Sort::as(dr), Sort::as(ar));
    }
    return error_arg();
}

std::vector<Argument> infer_arguments(Session& ses, const Frame& declared,
                                      const std::vector<Argument>& supplied) {
    if (!ses.implicit_on) return supplied;
    Entries entries = declared.entries;
    std::vector<Argument> todo = supplied;
    std::vector<Argument> out;

    while (!entries.empty() && !todo.empty()) {
        FrameEntry e = entries.front();
        entries.erase(entries.begin());
        if (!is_dotted(e.binder)) {
            Argument t = todo.front();
            todo.erase(todo.begin());
            out.push_back(t);
            Frame rest;
            rest.entries = entries;
            entries = frame_subst(ses, e.binder, t, rest).entries;
            continue;
        }
        Entries rest_entries = entries;
        Sort wanted_sort = force_expand(ses, e.sort);
        Argument found = find_implicit(ses, {}, {}, e.binder, wanted_sort,
                                       first_undotted_sort(rest_entries),
                                       argument_sort_of(ses, todo.front()));
        out.push_back(found);
        Frame rest;
        rest.entries = entries;
        entries = frame_subst(ses, e.binder, found, rest).entries;
    }
    return out;
}

std::vector<Argument> purge_implicit_display(const Session& ses, const Ident& head,
                                             const std::vector<Argument>& args) {
    if (ses.show_implicit || head.ns != 0) return args;
    auto found = ses.lookup(head.name);
    if (!found || !found->sort.is_asort()) return args;
    const Entries& entries = found->sort.frame.entries;
    std::vector<Argument> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i < entries.size() && is_dotted(entries[i].binder)) continue;
        out.push_back(args[i]);
    }
    return out;
}

} // namespace lestrade
