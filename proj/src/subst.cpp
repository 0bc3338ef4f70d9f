#include "lestrade/subst.hpp"

#include <algorithm>

#include "lestrade/checker.hpp"

namespace lestrade {

namespace {

// the declared frame of a next-move definition (binder recorded as an
// abstraction, sort always an abstraction sort)
const Frame* next_move_defined_frame(const Session& ses, const std::string& name) {
    const FrameEntry* e = ses.next_move_entry(name);
    if (e == nullptr || e->age != 0) return nullptr;
    if (!e->sort.is_asort()) return nullptr;
    return &e->sort.frame;
}

std::vector<FrameEntry> rename_entries(Session& ses, long tag,
                                       const std::vector<FrameEntry>& entries, std::size_t idx) {
    if (idx >= entries.size()) return {};
    if (idx + 1 == entries.size()) return {entries[idx]};

    std::vector<FrameEntry> tail = rename_entries(ses, tag, entries, idx + 1);
    const FrameEntry& e = entries[idx];
    Argument oldb = e.binder;
    Argument newb;
    if (oldb.kind == ArgKind::Abst) {
        newb = Argument::abstraction(oldb.abst.name, static_cast<int>(tag));
    } else if (oldb.kind == ArgKind::Ent && oldb.ent.is_atom()) {
        newb = Argument::entity(Entity::atom(oldb.ent.id.name, static_cast<int>(tag)));
    } else {
        ses.error("Bad case in renamespace");
        std::vector<FrameEntry> out;
        out.push_back(e);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }
    Frame tf;
    tf.entries = std::move(tail);
    tf = frame_subst(ses, oldb, newb, tf);

    std::vector<FrameEntry> out;
    out.push_back({e.age, newb, e.sort});
    out.insert(out.end(), tf.entries.begin(), tf.entries.end());
    return out;
}

} // namespace

Frame rename_namespace(Session& ses, const Frame& f) {
    long tag = ses.new_nameserial();
    if (f.entries.empty()) {
        ses.error("Bad case in renamespace");
        return f;
    }
    Frame out;
    out.entries = rename_entries(ses, tag, f.entries, 0);
    return out;
}

Frame frame_subst(Session& ses, const Argument& from, const Argument& to, const Frame& f) {
    Frame out;
    out.entries.reserve(f.entries.size());
    for (const FrameEntry& e : f.entries) {
        Argument b = arg_subst(ses, from, to, e.binder);
        Sort s = sort_subst(ses, from, to, e.sort);
        out.entries.push_back({e.age, std::move(b), std::move(s)});
    }
    return out;
}

Sort sort_subst(Session& ses, const Argument& from, const Argument& to, const Sort& s) {
    if (s.is_esort()) return Sort::es(esort_subst(ses, from, to, s.esort));
    return Sort::as(frame_subst(ses, from, to, rename_namespace(ses, s.frame)));
}

EntitySort esort_subst(Session& ses, const Argument& from, const Argument& to,
                       const EntitySort& s) {
    if (s.kind == ESortKind::That) return EntitySort::that(entity_subst(ses, from, to, s.ent));
    if (s.kind == ESortKind::In) return EntitySort::in(entity_subst(ses, from, to, s.ent));
    return s;
}

Argument arg_subst(Session& ses, const Argument& from, const Argument& to, const Argument& a) {
    switch (a.kind) {
    case ArgKind::Ent:
        return Argument::entity(entity_subst(ses, from, to, a.ent));
    case ArgKind::Abst: {
        if (a.abst.ns == 0) {
            if (const Frame* fr = next_move_defined_frame(ses, a.abst.name))
                return arg_subst(ses, from, to, Argument::lambda(*fr));
        }
        if (a == from && !(from == to)) return arg_subst(ses, from, to, to);
        return a;
    }
    case ArgKind::Lam: {
        if (from == to) return Argument::lambda(frame_subst(ses, from, to, a.lam));
        return Argument::lambda(frame_subst(ses, from, to, rename_namespace(ses, a.lam)));
    }
    }
    return a;
}

Entity entity_subst(Session& ses, const Argument& from, const Argument& to, const Entity& e) {
    auto subst_args = [&](const std::vector<Argument>& args) {
        std::vector<Argument> out;
        out.reserve(args.size());
        for (const Argument& a : args) out.push_back(arg_subst(ses, from, to, a));
        return out;
    };
    auto expand_next_move_def = [&](const Entity& app) -> Entity {
        const Frame* fr = next_move_defined_frame(ses, app.id.name);
        Entity inst = instantiate_body(ses, *fr, subst_args(app.args));
        return entity_subst(ses, from, to, inst);
    };

    if (from.kind == ArgKind::Ent && to.kind == ArgKind::Ent) {
        switch (e.kind) {
        case EntKind::Atom:
            return e == from.ent ? to.ent : e;
        case EntKind::App:
            if (e.id.ns == 0 && next_move_defined_frame(ses, e.id.name) != nullptr)
                return expand_next_move_def(e);
            return Entity::app(e.id.name, e.id.ns, subst_args(e.args));
        default:
            return e;
        }
    }
    if (from.kind == ArgKind::Abst && to.kind == ArgKind::Abst) {
        if (e.kind == EntKind::App) {
            if (e.id.ns == 0 && next_move_defined_frame(ses, e.id.name) != nullptr)
                return expand_next_move_def(e);
            if (e.id == from.abst)
                return entity_subst(ses, from, to,
                                    Entity::app(to.abst.name, to.abst.ns, subst_args(e.args)));
            return Entity::app(e.id.name, e.id.ns, subst_args(e.args));
        }
        return e;
    }
    if (from.kind == ArgKind::Abst && to.kind == ArgKind::Lam) {
        if (e.kind == EntKind::App) {
            if (e.id.ns == 0 && next_move_defined_frame(ses, e.id.name) != nullptr)
                return expand_next_move_def(e);
            if (e.id == from.abst) {
                // beta: instantiate the lambda body on the substituted args
                Entity inst = instantiate_body(ses, to.lam, subst_args(e.args));
                return entity_subst(ses, from, to, inst);
            }
            return Entity::app(e.id.name, e.id.ns, subst_args(e.args));
        }
        return e;
    }
    return e;
}

bool alpha_equal_sorts(Session& ses, bool exact, const Sort& a, const Sort& b) {
    return equal_sorts(ses, exact, a, b);
}

namespace {

void deps_of(Session& ses, const Argument& a, std::vector<Argument>& out);

void deps_of_sort(Session& ses, const Sort& s, std::vector<Argument>& out) {
    if (s.is_esort()) {
        if (s.esort.kind == ESortKind::That || s.esort.kind == ESortKind::In)
            deps_of(ses, Argument::entity(s.esort.ent), out);
        return;
    }
    const std::vector<FrameEntry>& es = s.frame.entries;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i + 1 == es.size() && es[i].binder.kind == ArgKind::Ent)
            deps_of(ses, es[i].binder, out);
        deps_of_sort(ses, es[i].sort, out);
    }
}

void deps_of(Session& ses, const Argument& a, std::vector<Argument>& out) {
    switch (a.kind) {
    case ArgKind::Ent: {
        const Entity& e = a.ent;
        if (e.is_atom() && e.id.ns == 0) {
            if (const FrameEntry* d = ses.next_move_entry(e.id.name)) {
                if (d->age != 0 && !contains_argument(out, a)) out.push_back(a);
                deps_of_sort(ses, d->sort, out);
            }
        } else if (e.is_app()) {
            if (e.id.ns == 0) {
                if (const FrameEntry* d = ses.next_move_entry(e.id.name)) {
                    Argument head = Argument::abstraction(e.id.name, 0);
                    if (d->age != 0 && !contains_argument(out, head)) out.push_back(head);
                    deps_of_sort(ses, d->sort, out);
                }
                for (const Argument& x : e.args) deps_of(ses, x, out);
            }
        }
        return;
    }
    case ArgKind::Abst:
        if (a.abst.ns == 0) {
            if (const FrameEntry* d = ses.next_move_entry(a.abst.name)) {
                if (d->age != 0 && !contains_argument(out, a)) out.push_back(a);
                deps_of_sort(ses, d->sort, out);
            }
        }
        return;
    case ArgKind::Lam:
        deps_of_sort(ses, Sort::as(a.lam), out);
        return;
    }
}

} // namespace

bool contains_argument(const std::vector<Argument>& v, const Argument& a) {
    for (const Argument& x : v)
        if (x == a) return true;
    return false;
}

std::vector<Argument> dependencies(Session& ses, const Argument& a) {
    std::vector<Argument> out;
    deps_of(ses, a, out);
    auto age_of = [&](const Argument& x) -> long {
        const std::string& n = x.kind == ArgKind::Abst ? x.abst.name : x.ent.id.name;
        const FrameEntry* e = ses.next_move_entry(n);
        return e != nullptr ? e->age : 0;
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const Argument& x, const Argument& y) { return age_of(x) < age_of(y); });
    return out;
}

std::vector<Argument> sort_dependencies(Session& ses, const Sort& s) {
    std::vector<Argument> out;
    deps_of_sort(ses, s, out);
    return out;
}

} // namespace lestrade
