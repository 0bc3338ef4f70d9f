#include "lestrade/term.hpp"

#include <map>

namespace lestrade {

bool operator==(const Entity& a, const Entity& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case EntKind::Unknown:
    case EntKind::Error:
        return true;
    case EntKind::Atom:
        return a.id == b.id;
    case EntKind::App:
        if (!(a.id == b.id) || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (a.args[i] != b.args[i]) return false;
        return true;
    }
    return false;
}

bool operator==(const EntitySort& a, const EntitySort& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == ESortKind::That || a.kind == ESortKind::In) return a.ent == b.ent;
    return true;
}

bool operator==(const Argument& a, const Argument& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case ArgKind::Ent: return a.ent == b.ent;
    case ArgKind::Abst: return a.abst == b.abst;
    case ArgKind::Lam: return a.lam == b.lam;
    }
    return false;
}

bool operator==(const Frame& a, const Frame& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const FrameEntry& x = a.entries[i];
        const FrameEntry& y = b.entries[i];
        if (x.age != y.age || x.binder != y.binder || x.sort != y.sort) return false;
    }
    return true;
}

bool operator==(const Sort& a, const Sort& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == SortKind::ESort) return a.esort == b.esort;
    return a.frame == b.frame;
}

Entity negate_namespaces(const Entity& e) {
    switch (e.kind) {
    case EntKind::Unknown:
    case EntKind::Error:
        return e;
    case EntKind::Atom:
        return Entity::atom(e.id.name, -e.id.ns);
    case EntKind::App: {
        std::vector<Argument> args;
        args.reserve(e.args.size());
        for (const Argument& a : e.args) args.push_back(negate_namespaces(a));
        return Entity::app(e.id.name, -e.id.ns, std::move(args));
    }
    }
    return e;
}

Argument negate_namespaces(const Argument& a) {
    switch (a.kind) {
    case ArgKind::Ent: return Argument::entity(negate_namespaces(a.ent));
    case ArgKind::Abst: return Argument::abstraction(a.abst.name, -a.abst.ns);
    case ArgKind::Lam: return Argument::lambda(negate_namespaces(a.lam));
    }
    return a;
}

Frame negate_namespaces(const Frame& f) {
    Frame out;
    out.entries.reserve(f.entries.size());
    for (const FrameEntry& e : f.entries)
        out.entries.push_back({e.age, negate_namespaces(e.binder), negate_namespaces(e.sort)});
    return out;
}

Sort negate_namespaces(const Sort& s) {
    if (s.is_esort()) {
        EntitySort es = s.esort;
        if (es.kind == ESortKind::That || es.kind == ESortKind::In)
            es.ent = negate_namespaces(es.ent);
        return Sort::es(es);
    }
    return Sort::as(negate_namespaces(s.frame));
}

namespace {

struct Renumberer {
    std::map<int, int> seen;
    int fresh = 1;

    int map(int n) {
        if (n == 0) return 0;
        auto it = seen.find(n);
        if (it != seen.end()) return it->second;
        seen.emplace(n, fresh);
        return fresh++;
    }

    Entity go(const Entity& e) {
        switch (e.kind) {
        case EntKind::Unknown:
        case EntKind::Error:
            return e;
        case EntKind::Atom:
            return Entity::atom(e.id.name, map(e.id.ns));
        case EntKind::App: {
            int ns = map(e.id.ns);
            std::vector<Argument> args;
            args.reserve(e.args.size());
            for (const Argument& a : e.args) args.push_back(go(a));
            return Entity::app(e.id.name, ns, std::move(args));
        }
        }
        return e;
    }
    Argument go(const Argument& a) {
        switch (a.kind) {
        case ArgKind::Ent: return Argument::entity(go(a.ent));
        case ArgKind::Abst: return Argument::abstraction(a.abst.name, map(a.abst.ns));
        case ArgKind::Lam: return Argument::lambda(go(a.lam));
        }
        return a;
    }
    EntitySort go(const EntitySort& s) {
        EntitySort out = s;
        if (s.kind == ESortKind::That || s.kind == ESortKind::In) out.ent = go(s.ent);
        return out;
    }
    Frame go(const Frame& f) {
        Frame out;
        out.entries.reserve(f.entries.size());
        for (const FrameEntry& e : f.entries) {
            Argument b = go(e.binder);
            Sort s = go(e.sort);
            out.entries.push_back({e.age, std::move(b), std::move(s)});
        }
        return out;
    }
    Sort go(const Sort& s) {
        if (s.is_esort()) return Sort::es(go(s.esort));
        return Sort::as(go(s.frame));
    }
};

} // namespace

Sort reindex_for_record(const Sort& s) {
    Renumberer r;
    return r.go(s);
}

Frame reindex_for_record(const Frame& f) {
    Renumberer r;
    return r.go(f);
}

bool is_dotted(const std::string& name) { return !name.empty() && name[0] == '.'; }

bool is_dotted(const Argument& binder) {
    if (binder.kind == ArgKind::Ent && binder.ent.is_atom()) return is_dotted(binder.ent.id.name);
    if (binder.kind == ArgKind::Abst) return is_dotted(binder.abst.name);
    return false;
}

std::string dot(const std::string& s) {
    if (s.empty() || s[0] == '.') return s;
    return "." + s;
}

std::string undot(const std::string& s) {
    if (!s.empty() && s[0] == '.') return s.substr(1);
    return s;
}

Argument arg_dot(const Argument& a) {
    if (a.kind == ArgKind::Ent && a.ent.is_atom())
        return Argument::entity(Entity::atom(dot(a.ent.id.name), a.ent.id.ns));
    if (a.kind == ArgKind::Abst) return Argument::abstraction(dot(a.abst.name), a.abst.ns);
    return a;
}

Argument arg_undot(const Argument& a) {
    if (a.kind == ArgKind::Ent && a.ent.is_atom())
        return Argument::entity(Entity::atom(undot(a.ent.id.name), a.ent.id.ns));
    if (a.kind == ArgKind::Abst) return Argument::abstraction(undot(a.abst.name), a.abst.ns);
    return a;
}

} // namespace lestrade
