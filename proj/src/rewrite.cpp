#include "lestrade/rewrite.hpp"

#include <algorithm>

#include "lestrade/checker.hpp"
#include "lestrade/implicit.hpp"
#include "lestrade/render.hpp"
#include "lestrade/subst.hpp"

namespace lestrade {

const Argument* Binding::find(const Argument& var) const {
    for (const auto& [v, val] : pairs_)
        if (v == var) return &val;
    return nullptr;
}

bool Binding::bind(Session& ses, const Argument& var, const Argument& value) {
    if (const Argument* prev = find(var)) return equal_arguments(ses, *prev, value);
    pairs_.emplace_back(var, value);
    return true;
}

bool Binding::merge(Session& ses, const Binding& other) {
    for (const auto& [v, val] : other.pairs_)
        if (!bind(ses, v, val)) return false;
    return true;
}

namespace {

std::optional<Binding> match_args(Session& ses, const std::vector<Argument>& pats,
                                  const std::vector<Argument>& args);

} // namespace

std::optional<Binding> match_pattern(Session& ses, bool head_rw, const Entity& pattern,
                                     const Entity& term) {
    if (pattern.is_atom()) {
        if (pattern.id.ns != 0) {
            Binding b;
            b.bind(ses, Argument::entity(pattern), Argument::entity(term));
            return b;
        }
        if (pattern == term) return Binding{};
        return std::nullopt;
    }
    if (pattern.is_app() && term.is_app()) {
        Entity t = head_rw ? head_rewrite(ses, term) : term;
        if (!t.is_app() || !(t.id.name == pattern.id.name)) return std::nullopt;
        return match_args(ses, pattern.args, t.args);
    }
    return std::nullopt;
}

namespace {

std::optional<Binding> match_args(Session& ses, const std::vector<Argument>& pats,
                                  const std::vector<Argument>& args) {
    if (pats.size() != args.size()) return std::nullopt;
    Binding acc;
    for (std::size_t i = 0; i < pats.size(); ++i) {
        const Argument& p = pats[i];
        const Argument& a = args[i];
        if (p.is_entity() && a.is_entity()) {
            auto m = match_pattern(ses, true, p.ent, a.ent);
            if (!m || !acc.merge(ses, *m)) return std::nullopt;
        } else if (p.is_abst()) {
            if (p.abst.ns != 0) {
                if (!acc.bind(ses, p, a)) return std::nullopt;
            } else if (!(p == a)) {
                return std::nullopt;
            }
        } else {
            return std::nullopt;
        }
    }
    return acc;
}

Entity apply_binding(Session& ses, const Binding& b, Entity target) {
    // values never contain pattern variables, so order is immaterial
    for (const auto& [var, val] : b.pairs()) target = entity_subst(ses, var, val, target);
    return target;
}

Entity rewrite_with_list(Session& ses, const RuleList& rules, const Entity& term, bool* hit) {
    for (const RewriteRule& r : rules) {
        auto m = match_pattern(ses, false, r.pattern, term);
        if (m) {
            *hit = true;
            return apply_binding(ses, *m, r.target);
        }
    }
    *hit = false;
    return term;
}

} // namespace

Entity rewrite_once(Session& ses, const Entity& term) {
    if (!ses.rewriting_on) return term;
    // last move first, then lower moves; next-move rules never apply
    for (int i = ses.depth() - 2; i >= 0; --i) {
        bool hit = false;
        Entity out = rewrite_with_list(ses, ses.rewrites[i], term, &hit);
        if (hit) return out;
    }
    return term;
}

Entity head_rewrite(Session& ses, const Entity& term) {
    if (!(term.is_app() && term.id.ns == 0)) return term;
    Entity cur = term;
    for (;;) {
        Entity next = rewrite_once(ses, cur);
        if (next == cur) return cur;
        cur = next;
        if (!(cur.is_app() && cur.id.ns == 0)) return cur;
    }
}

Entity full_rewrite(Session& ses, const Entity& term) {
    if (term.is_app() && term.id.ns == 0) {
        std::vector<Argument> rewritten;
        rewritten.reserve(term.args.size());
        for (const Argument& a : term.args) {
            if (a.is_entity()) rewritten.push_back(Argument::entity(full_rewrite(ses, a.ent)));
            else rewritten.push_back(a);
        }
        Entity stepped = rewrite_once(ses, Entity::app(term.id.name, 0, std::move(rewritten)));
        if (stepped == term) return stepped;
        return full_rewrite(ses, stepped);
    }
    if (term.is_atom() && term.id.ns == 0) {
        Entity stepped = rewrite_once(ses, term);
        if (stepped == term) return stepped;
        return full_rewrite(ses, stepped);
    }
    return term;
}

namespace {

// all sorts in the term deducible: no next-move defined names; applications
// headed by variables carry fully rigid arguments
bool type_rigid(Session& ses, bool weak, const Argument& a) {
    auto next_defined = [&](const std::string& n) {
        const FrameEntry* e = ses.next_move_entry(n);
        return e != nullptr && e->age == 0;
    };
    auto in_next = [&](const std::string& n) { return ses.next_move_entry(n) != nullptr; };

    if (a.is_entity() && a.ent.is_atom() && a.ent.id.ns == 0)
        return (weak && !next_defined(a.ent.id.name)) || !in_next(a.ent.id.name);
    if (a.is_entity() && a.ent.is_app() && a.ent.id.ns == 0) {
        const Entity& e = a.ent;
        auto args_rigid = [&](bool w) {
            for (const Argument& x : e.args)
                if (!type_rigid(ses, w, x)) return false;
            return true;
        };
        return (weak && !next_defined(e.id.name) && args_rigid(false)) ||
               (!in_next(e.id.name) && args_rigid(true));
    }
    if (a.is_abst() && a.abst.ns == 0)
        return (weak && !next_defined(a.abst.name)) || !in_next(a.abst.name);
    return false;
}

bool is_variable_argument(Session& ses, const Argument& a) {
    if (a.is_entity() && a.ent.is_atom() && a.ent.id.ns == 0)
        return ses.is_next_move_variable(a.ent.id.name);
    if (a.is_abst() && a.abst.ns == 0) return ses.is_next_move_variable(a.abst.name);
    return false;
}

std::string argument_name(const Argument& a) {
    if (a.is_abst()) return a.abst.name;
    if (a.is_entity() && a.ent.is_atom()) return a.ent.id.name;
    return "?!?!";
}

// the recorded sort of a rewrite witness function carries the pattern in
// its second-to-last entry (that P(pattern)) and the target in its output
bool extract_rule_terms(const Frame& f, Entity* pattern, Entity* target) {
    if (f.size() < 2) return false;
    const Sort& wit = f.entries[f.size() - 2].sort;
    const Sort& out = f.entries.back().sort;
    auto payload = [](const Sort& s, Entity* dst) {
        if (!s.is_esort() || s.esort.kind != ESortKind::That) return false;
        const Entity& e = s.esort.ent;
        if (!e.is_app() || e.args.size() != 1 || !e.args[0].is_entity()) return false;
        *dst = e.args[0].ent;
        return true;
    };
    return payload(wit, pattern) && payload(out, target);
}

} // namespace

std::optional<RewriteSpec> validate_rewrite_args(Session& ses, const std::vector<Argument>& args) {
    if (args.size() < 3) return std::nullopt;
    RewriteSpec spec;
    spec.prefix.assign(args.begin(), args.end() - 3);
    const Argument& pred = args[args.size() - 3];
    const Argument& pat = args[args.size() - 2];
    const Argument& tgt = args[args.size() - 1];

    // pattern: an entity, not a bare variable, type rigid
    if (!pat.is_entity()) return std::nullopt;
    if (pat.ent.is_atom() && pat.ent.id.ns == 0) return std::nullopt;
    if (!type_rigid(ses, false, pat)) return std::nullopt;

    Sort pat_sort = argument_sort_of(ses, pat);
    if (!equal_sorts(ses, false, pat_sort, argument_sort_of(ses, tgt))) return std::nullopt;

    // P: a next-move variable of sort exactly [(x:tau) => (---:prop)]
    if (!is_variable_argument(ses, pred)) return std::nullopt;
    Frame want;
    want.entries.push_back({-1, Argument::entity(Entity::atom("???", 1)), pat_sort});
    want.entries.push_back(
        {-1, Argument::entity(Entity::unknown()), Sort::es(EntitySort::prop())});
    if (!equal_sorts(ses, true, argument_sort_of(ses, pred), Sort::as(want))) return std::nullopt;

    std::vector<Argument> pat_deps = dependencies(ses, pat);
    if (contains_argument(pat_deps, pred)) return std::nullopt;
    for (const Argument& p : spec.prefix)
        if (!contains_argument(pat_deps, p)) return std::nullopt;
    for (const Argument& d : dependencies(ses, tgt))
        if (!contains_argument(pat_deps, d)) return std::nullopt;
    if (!tgt.is_entity()) return std::nullopt;

    spec.predicate = pred;
    spec.pattern = pat.ent;
    spec.target = tgt.ent;
    return spec;
}

bool cmd_rewritec(Session& ses, const std::string& name, const std::vector<Argument>& args,
                  const std::string& witness) {
    if (!ses.rewriting_on) {
        ses.error("Rewriting is turned off");
        return false;
    }
    if (is_reserved_word(name) || ses.lookup(name)) {
        ses.error("Identifier " + name + " is not fresh");
        return false;
    }
    if (is_reserved_word(witness) || ses.lookup(witness)) {
        ses.error("Identifier " + witness + " is not fresh");
        return false;
    }
    auto spec = validate_rewrite_args(ses, args);
    if (!spec) {
        ses.error("Proposed rewrite list does not sort check");
        return false;
    }
    std::string pred = argument_name(spec->predicate);
    if (!cmd_declare(ses, witness,
                     EntitySort::that(Entity::app(pred, 0, {Argument::entity(spec->pattern)}))))
        return false;
    std::vector<std::string> argnames;
    for (const Argument& p : spec->prefix) argnames.push_back(argument_name(p));
    argnames.push_back(pred);
    argnames.push_back(witness);
    if (!cmd_construct(ses, name, argnames,
                       EntitySort::that(Entity::app(pred, 0, {Argument::entity(spec->target)}))))
        return false;

    auto rec = ses.lookup(name);
    Entity pattern, target;
    if (!rec || !rec->sort.is_asort() || !extract_rule_terms(rec->sort.frame, &pattern, &target)) {
        ses.error("Construction of " + name + " failed for some reason");
        return false;
    }
    RuleList& last = ses.rewrites[ses.depth() - 2];
    last.insert(last.begin(),
                RewriteRule{name, negate_namespaces(pattern), negate_namespaces(target)});
    return true;
}

bool cmd_rewrited(Session& ses, const std::string& name, const std::vector<Argument>& args,
                  const std::string& witness) {
    if (!ses.rewriting_on) {
        ses.error("Rewriting is turned off");
        return false;
    }
    auto evidence = ses.lookup(name);
    if (!evidence || !evidence->sort.is_asort()) {
        ses.error("Evidence function " + name + " is not declared");
        return false;
    }
    if (is_reserved_word(witness) || ses.lookup(witness)) {
        ses.error("Identifier " + witness + " is not fresh");
        return false;
    }
    auto spec = validate_rewrite_args(ses, args);
    if (!spec) {
        ses.error("Proposed rewrite list does not sort check");
        return false;
    }
    std::string pred = argument_name(spec->predicate);
    if (!cmd_declare(ses, witness,
                     EntitySort::that(Entity::app(pred, 0, {Argument::entity(spec->pattern)}))))
        return false;

    std::vector<Argument> call = spec->prefix;
    call.push_back(spec->predicate);
    call.push_back(Argument::entity(Entity::atom(witness)));
    std::vector<Argument> full = infer_arguments(ses, evidence->sort.frame, call);
    EntitySort got = entity_sort_of(ses, Entity::app(name, 0, full));
    EntitySort want = EntitySort::that(Entity::app(pred, 0, {Argument::entity(spec->target)}));
    if (!equal_sorts(ses, false, Sort::es(got), Sort::es(want))) {
        ses.error("Rewrite demonstration failed");
        return false;
    }
    ses.message("Rewrite demonstration succeeded");

    Entity pattern, target;
    if (!extract_rule_terms(evidence->sort.frame, &pattern, &target)) {
        ses.error("Rewrite demonstration failed");
        return false;
    }
    RuleList& last = ses.rewrites[ses.depth() - 2];
    // a rule by the same witness identifier in the last move is replaced
    last.erase(std::remove_if(last.begin(), last.end(),
                              [&](const RewriteRule& r) { return r.witness == name; }),
               last.end());
    last.insert(last.begin(),
                RewriteRule{name, negate_namespaces(pattern), negate_namespaces(target)});
    return true;
}

std::string render_rewrites(const Session& ses) {
    std::string out;
    for (int i = ses.depth() - 2; i >= 0; --i) {
        for (const RewriteRule& r : ses.rewrites[i]) {
            out += r.witness + ":  " + render_entity(ses, r.pattern) + " := " +
                   render_entity(ses, r.target) + "\n";
        }
        out += "\n\n";
    }
    return out;
}

} // namespace lestrade
