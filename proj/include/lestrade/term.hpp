#ifndef LESTRADE_TERM_HPP
#define LESTRADE_TERM_HPP

#include <string>
#include <vector>

namespace lestrade {

// An identifier together with its namespace tag.  Tag 0 is user scope,
// positive tags mark renamed bound variables, negative tags mark rewrite
// pattern variables.
struct Ident {
    std::string name;
    int ns = 0;

    friend bool operator==(const Ident& a, const Ident& b) {
        return a.ns == b.ns && a.name == b.name;
    }
    friend bool operator!=(const Ident& a, const Ident& b) { return !(a == b); }
};

enum class EntKind { Unknown, Error, Atom, App };

struct Argument;

// First-order entities: atoms, applications of named abstractions, and the
// Unknown (---) / Error (???) markers.
struct Entity {
    EntKind kind = EntKind::Unknown;
    Ident id;                     // Atom, App head
    std::vector<Argument> args;   // App only

    static Entity unknown() { return Entity{}; }
    static Entity error() { return Entity{EntKind::Error, {}, {}}; }
    static Entity atom(std::string name, int ns = 0) {
        return Entity{EntKind::Atom, {std::move(name), ns}, {}};
    }
    static Entity app(std::string name, int ns, std::vector<Argument> args);

    bool is_app() const { return kind == EntKind::App; }
    bool is_atom() const { return kind == EntKind::Atom; }
};

enum class ESortKind { Obj, Prop, Type, That, In, Error };

// Entity sorts: obj | prop | type | that p | in tau | error.
struct EntitySort {
    ESortKind kind = ESortKind::Error;
    Entity ent;   // That / In payload

    static EntitySort obj() { return {ESortKind::Obj, {}}; }
    static EntitySort prop() { return {ESortKind::Prop, {}}; }
    static EntitySort type() { return {ESortKind::Type, {}}; }
    static EntitySort that(Entity e) { return {ESortKind::That, std::move(e)}; }
    static EntitySort in(Entity e) { return {ESortKind::In, std::move(e)}; }
    static EntitySort error() { return {ESortKind::Error, {}}; }
};

struct FrameEntry;

// A dependent frame: ordered (age, binder, sort) entries.  Frames serve as
// abstraction sorts, lambda terms, argument lists, and moves.  When used as
// an abstraction sort the final entry holds the body (Unknown for
// primitives, the definiens for definitions) and the output entity sort.
struct Frame {
    std::vector<FrameEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

enum class SortKind { ESort, ASort };

struct Sort {
    SortKind kind = SortKind::ESort;
    EntitySort esort;
    Frame frame;

    static Sort es(EntitySort s) { return {SortKind::ESort, std::move(s), {}}; }
    static Sort as(Frame f) { return {SortKind::ASort, {}, std::move(f)}; }

    bool is_esort() const { return kind == SortKind::ESort; }
    bool is_asort() const { return kind == SortKind::ASort; }
};

enum class ArgKind { Ent, Abst, Lam };

// Arguments: entities, named abstractions, or internal lambda terms.
struct Argument {
    ArgKind kind = ArgKind::Ent;
    Entity ent;
    Ident abst;
    Frame lam;

    static Argument entity(Entity e) {
        Argument a; a.kind = ArgKind::Ent; a.ent = std::move(e); return a;
    }
    static Argument abstraction(std::string name, int ns = 0) {
        Argument a; a.kind = ArgKind::Abst; a.abst = {std::move(name), ns}; return a;
    }
    static Argument lambda(Frame f) {
        Argument a; a.kind = ArgKind::Lam; a.lam = std::move(f); return a;
    }

    bool is_entity() const { return kind == ArgKind::Ent; }
    bool is_abst() const { return kind == ArgKind::Abst; }
    bool is_lambda() const { return kind == ArgKind::Lam; }
};

struct FrameEntry {
    long age = 0;
    Argument binder;
    Sort sort;
};

inline Entity Entity::app(std::string name, int ns, std::vector<Argument> args) {
    Entity e;
    e.kind = EntKind::App;
    e.id = {std::move(name), ns};
    e.args = std::move(args);
    return e;
}

// Structural (syntactic) equality.
bool operator==(const Entity& a, const Entity& b);
bool operator==(const EntitySort& a, const EntitySort& b);
bool operator==(const Argument& a, const Argument& b);
bool operator==(const Frame& a, const Frame& b);
bool operator==(const Sort& a, const Sort& b);
inline bool operator!=(const Entity& a, const Entity& b) { return !(a == b); }
inline bool operator!=(const EntitySort& a, const EntitySort& b) { return !(a == b); }
inline bool operator!=(const Argument& a, const Argument& b) { return !(a == b); }
inline bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }
inline bool operator!=(const Sort& a, const Sort& b) { return !(a == b); }

// Negate every namespace tag; involutive.  Used to move rewrite pattern
// variables into their reserved namespace.
Entity negate_namespaces(const Entity& e);
Argument negate_namespaces(const Argument& a);
Frame negate_namespaces(const Frame& f);
Sort negate_namespaces(const Sort& s);

// Renumber namespace tags to 1,2,3,... in first-occurrence order (0 is
// fixed).  Applied to declarations as they are recorded and displayed.
Sort reindex_for_record(const Sort& s);
Frame reindex_for_record(const Frame& f);

// Leading-dot classification for implicit-argument binders.
bool is_dotted(const std::string& name);
bool is_dotted(const Argument& binder);
std::string dot(const std::string& s);
std::string undot(const std::string& s);
Argument arg_dot(const Argument& a);
Argument arg_undot(const Argument& a);

} // namespace lestrade

#endif
