#include "lestrade/render.hpp"

#include "lestrade/implicit.hpp"

namespace lestrade {

namespace {

std::string render_ident(const Ident& id) {
    if (id.ns == 0) return id.name;
    return id.name + "_" + std::to_string(id.ns);
}

} // namespace

std::string render_entity(const Session& ses, const Entity& e) {
    switch (e.kind) {
    case EntKind::Unknown: return "---";
    case EntKind::Error: return "???";
    case EntKind::Atom: return render_ident(e.id);
    case EntKind::App: {
        if (e.args.empty()) return render_ident(e.id);
        std::vector<Argument> shown = purge_implicit_display(ses, e.id, e.args);
        if (shown.size() == 2 && shown[0].is_entity()) {
            return "(" + render_argument(ses, shown[0]) + " " + render_ident(e.id) + " " +
                   render_argument(ses, shown[1]) + ")";
        }
        std::string out = render_ident(e.id) + "(";
        if (shown.empty()) {
            out += "*?*?)";
            return out;
        }
        for (std::size_t i = 0; i < shown.size(); ++i) {
            if (i > 0) out += ",";
            out += render_argument(ses, shown[i]);
        }
        out += ")";
        return out;
    }
    }
    return "???";
}

std::string render_entity_sort(const Session& ses, const EntitySort& s) {
    switch (s.kind) {
    case ESortKind::Obj: return "obj";
    case ESortKind::Prop: return "prop";
    case ESortKind::Type: return "type";
    case ESortKind::That: return "that " + render_entity(ses, s.ent);
    case ESortKind::In: return "in " + render_entity(ses, s.ent);
    case ESortKind::Error: return "error";
    }
    return "error";
}

std::string render_argument(const Session& ses, const Argument& a) {
    switch (a.kind) {
    case ArgKind::Ent: return render_entity(ses, a.ent);
    case ArgKind::Abst: return render_ident(a.abst);
    case ArgKind::Lam: return "[" + render_frame_body(ses, a.lam);
    }
    return "???";
}

std::string render_frame_body(const Session& ses, const Frame& f) {
    if (f.entries.empty()) return "(?*?*?*?)";
    std::string out;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        const FrameEntry& e = f.entries[i];
        out += "(" + render_argument(ses, e.binder) + ":" + render_sort(ses, e.sort) + ")";
        if (i + 1 == f.entries.size()) out += "]";
        else if (i + 2 == f.entries.size()) out += " => ";
        else out += ",";
    }
    return out;
}

std::string render_sort(const Session& ses, const Sort& s) {
    if (s.is_esort()) return render_entity_sort(ses, s.esort);
    return "[" + render_frame_body(ses, s.frame);
}

std::string render_declaration(const Session& ses, const std::string& name) {
    auto found = ses.lookup(name);
    if (!found) return name + " is not declared";
    Sort shown = reindex_for_record(found->sort);
    int move_index = ses.depth() - 1 - found->distance;
    return name + ":  " + render_sort(ses, shown) + " {move " + std::to_string(move_index) +
           ses.move_name_suffix(found->distance) + "}";
}

std::vector<std::string> Pretty::wrap(const std::string& text, int depth_indent) const {
    std::vector<std::string> lines;
    std::string indent(static_cast<std::size_t>(depth_indent), ' ');
    std::string cur = indent;
    int extra = 0;       // bracket depth at the current line start
    int budget = margin_;
    bool fresh = true;

    auto flush = [&]() {
        lines.push_back(cur);
        cur = indent + std::string(static_cast<std::size_t>(extra > 0 ? 2 : 0), ' ');
        budget = margin_;
        fresh = true;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') {
            flush();
            continue;
        }
        if (fresh && c == ' ') continue; // strip indentation resurfacing mid-wrap
        fresh = false;
        if (c == '[') ++extra;
        if (c == ']') --extra;
        cur += c;
        --budget;
        if (budget <= 0) {
            bool single_space = c == ' ' && (i + 1 >= text.size() || text[i + 1] != ' ');
            if (c == ',' || c == ':' || c == ']' || single_space) flush();
        }
    }
    if (!cur.empty() && cur != indent) lines.push_back(cur);
    // drop trailing all-blank lines
    while (!lines.empty() && lines.back().find_first_not_of(' ') == std::string::npos)
        lines.pop_back();
    return lines;
}

} // namespace lestrade
