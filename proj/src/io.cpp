#include "onesys/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "onesys/errors.hpp"
#include "onesys/numeric.hpp"

namespace onesys::io {

namespace {

[[noreturn]] void bad(size_t line_no, const std::string& what) {
    throw IoFailure("surface file line " + std::to_string(line_no) + ": " +
                    what);
}

// lines with comments stripped, paired with their 1-based numbers
std::vector<std::pair<size_t, std::string>> logical_lines(
    const std::string& text) {
    std::vector<std::pair<size_t, std::string>> out;
    std::istringstream is(text);
    std::string line;
    for (size_t no = 1; std::getline(is, line); ++no) {
        if (size_t h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.emplace_back(no, line);
    }
    return out;
}

int parse_int(const std::string& tok, size_t line_no) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        bad(line_no, "expected integer, got '" + tok + "'");
    }
    if (used != tok.size())
        bad(line_no, "trailing characters in integer '" + tok + "'");
    return v;
}

srf::Slot parse_slot(const std::string& tok, size_t line_no) {
    size_t dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
        bad(line_no, "slot must look like VERTEX.SLOT, got '" + tok + "'");
    return {parse_int(tok.substr(0, dot), line_no),
            parse_int(tok.substr(dot + 1), line_no)};
}

void check_decimal(const std::string& tok, size_t line_no) {
    if (tok.empty()) bad(line_no, "empty decimal");
    for (char c : tok)
        if (std::string("0123456789.eE+-").find(c) == std::string::npos)
            bad(line_no, "bad decimal '" + tok + "'");
}

} // namespace

std::string write_surface(const SurfaceFile& s) {
    std::ostringstream os;
    os << "genus " << s.graph.genus() << "\n";
    os << "vertex-count " << s.graph.vertices << "\n";
    for (const auto& [a, b] : s.graph.edges)
        os << "edge " << a.v << "." << a.k << " " << b.v << "." << b.k << "\n";
    for (size_t e = 0; e < s.fn.lengths.size(); ++e)
        os << "length " << e << " " << s.fn.lengths[e] << "\n";
    for (size_t e = 0; e < s.fn.twists.size(); ++e)
        os << "twist " << e << " " << s.fn.twists[e] << "\n";
    os << "marked";
    for (int e : s.marked.edges) os << " " << e;
    os << "\n";
    return os.str();
}

SurfaceFile read_surface(const std::string& text) {
    int genus = -1, vertices = -1;
    std::vector<std::pair<srf::Slot, srf::Slot>> table;
    std::map<int, std::string> lengths, twists;
    std::vector<int> marked;
    bool saw_marked = false;

    for (const auto& [no, line] : logical_lines(text)) {
        std::istringstream is(line);
        std::string key;
        is >> key;
        std::vector<std::string> args;
        for (std::string t; is >> t;) args.push_back(t);

        if (key == "genus" || key == "vertex-count") {
            if (args.size() != 1) bad(no, key + " takes one integer");
            (key == "genus" ? genus : vertices) = parse_int(args[0], no);
        } else if (key == "edge") {
            if (args.size() != 2) bad(no, "edge takes two slots");
            table.push_back({parse_slot(args[0], no), parse_slot(args[1], no)});
        } else if (key == "length" || key == "twist") {
            if (args.size() != 2) bad(no, key + " takes EDGE DECIMAL");
            int e = parse_int(args[0], no);
            check_decimal(args[1], no);
            auto& m = key == "length" ? lengths : twists;
            if (!m.emplace(e, args[1]).second)
                bad(no, key + " repeated for edge " + std::to_string(e));
        } else if (key == "marked") {
            if (saw_marked) bad(no, "marked repeated");
            saw_marked = true;
            for (const auto& a : args) marked.push_back(parse_int(a, no));
        } else {
            bad(no, "unknown key '" + key + "'");
        }
    }

    if (vertices < 0) throw IoFailure("surface file: missing vertex-count");
    if (!saw_marked) throw IoFailure("surface file: missing marked line");

    SurfaceFile out;
    out.graph = srf::build_pants_graph(vertices, table);
    if (genus >= 0 && genus != out.graph.genus())
        throw IoFailure("surface file: genus line says " +
                        std::to_string(genus) + " but pairing table gives " +
                        std::to_string(out.graph.genus()));

    int E = static_cast<int>(out.graph.edges.size());
    for (auto [label, m] : {std::pair{"length", &lengths}, {"twist", &twists}}) {
        if (static_cast<int>(m->size()) != E)
            throw IoFailure(std::string("surface file: need one ") + label +
                            " per edge");
        for (const auto& [e, v] : *m)
            if (e < 0 || e >= E)
                throw IoFailure(std::string("surface file: ") + label +
                                " for nonexistent edge " + std::to_string(e));
    }
    for (int e = 0; e < E; ++e) {
        out.fn.lengths.push_back(lengths.at(e));
        out.fn.twists.push_back(twists.at(e));
    }

    out.marked.edges = marked;
    srf::validate(out.marked, out.graph);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    if (!f.good() && !f.eof()) throw IoFailure("read error on " + path);
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open " + path + " for writing");
    f << text;
    if (!f.good()) throw IoFailure("write error on " + path);
}

SurfaceFile load_surface(const std::string& path) {
    return read_surface(read_text_file(path));
}

void save_surface(const std::string& path, const SurfaceFile& s) {
    write_text_file(path, write_surface(s));
}

std::string write_curves(const std::vector<wrd::Word>& ws, int genus) {
    wrd::Group grp(genus);
    std::vector<std::pair<wrd::Word, wrd::Word>> keyed;
    for (const auto& w : ws) keyed.push_back({grp.unoriented_canonical(w), w});
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return wrd::word_less(x.first, y.first);
        return wrd::word_less(x.second, y.second);
    });
    std::ostringstream os;
    for (const auto& [k, w] : keyed) os << wrd::show(w) << "\n";
    return os.str();
}

std::vector<wrd::Word> read_curves(const std::string& text, int genus) {
    std::vector<wrd::Word> out;
    for (const auto& [no, line] : logical_lines(text)) {
        try {
            out.push_back(wrd::parse(line, genus));
        } catch (const Error& e) {
            throw IoFailure("curve file line " + std::to_string(no) + ": " +
                            e.what());
        }
    }
    return out;
}

std::vector<wrd::Word> load_curves(const std::string& path, int genus) {
    return read_curves(read_text_file(path), genus);
}

void save_curves(const std::string& path, const std::vector<wrd::Word>& ws,
                 int genus) {
    write_text_file(path, write_curves(ws, genus));
}

std::string serialize(const srf::SurfaceGroup& s, int digits) {
    const srf::Developed<num::MpIv>& d = s.developed<num::MpIv>();
    std::ostringstream os;
    os << "holonomy genus " << s.genus() << " vertices " << s.graph().vertices
       << " edges " << s.graph().edges.size() << "\n";
    os << "bits " << num::current_bits() << " digits " << digits << "\n";
    auto row = [&](const srf::Mat<num::MpIv>& m) {
        for (const num::MpIv* e : {&m.a, &m.b, &m.c, &m.d})
            os << " " << e->lo_string(digits) << " " << e->hi_string(digits);
        os << "\n";
    };
    for (size_t i = 0; i < d.gen.size(); ++i) {
        os << "gen " << i;
        row(d.gen[i]);
    }
    for (size_t e = 0; e < s.graph().edges.size(); ++e) {
        os << "cuff " << e;
        row(s.cuff_matrix<num::MpIv>(static_cast<int>(e)));
    }
    return os.str();
}

} // namespace onesys::io
