#pragma once

#include <string>
#include <vector>

#include "onesys/surface.hpp"
#include "onesys/words.hpp"

namespace onesys::io {

struct SurfaceFile {
    srf::PantsGraph graph;
    srf::FNCoords fn;
    srf::MarkedMulticurve marked;
};

// Surface file grammar (line-oriented, '#' starts a comment):
//
//   genus        G            optional; must match the pairing table
//   vertex-count V
//   edge         V.K V.K      one line per edge, slot = vertex.slot index;
//                             edge index is the line's position
//   length       E DECIMAL    one per edge
//   twist        E DECIMAL    one per edge
//   marked       E E ...      edge indices of the marked multicurve
//
// write_surface emits the canonical form: keys in the order above, single
// spaces, one trailing newline.  Reparsing canonical output is byte-stable.
std::string write_surface(const SurfaceFile& s);
SurfaceFile read_surface(const std::string& text);
SurfaceFile load_surface(const std::string& path);
void save_surface(const std::string& path, const SurfaceFile& s);

// Curve file: one word per line in the a1/B2 alphabet ('B2' inverse of b2),
// '#' starts a comment.  Canonical output sorts by unoriented canonical form.
std::string write_curves(const std::vector<wrd::Word>& ws, int genus);
std::vector<wrd::Word> read_curves(const std::string& text, int genus);
std::vector<wrd::Word> load_curves(const std::string& path, int genus);
void save_curves(const std::string& path, const std::vector<wrd::Word>& ws,
                 int genus);

// Decimal dump of the developed holonomy (generators, then cuff matrices) at
// the current working precision.  Byte-identical for identical surface data,
// digit count, and precision settings.
std::string serialize(const srf::SurfaceGroup& s, int digits);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace onesys::io
