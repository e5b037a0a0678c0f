#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onesys/geometry.hpp"
#include "onesys/words.hpp"

// Pants decompositions of closed orientable genus-g surfaces, Fenchel-Nielsen
// metrics, and explicit holonomy.  The combinatorial layer (gluing graph,
// relator rewriting, curve words) is computed once over plain integers; the
// matrix layer is recomputed per numeric backend so the certification ladder
// can rerun it at any precision.
//
// Gluing convention: each pair of pants carries three cuff slots 0,1,2 with
// fixed local cuff translations X0,X1,X2 (X2*X1*X0 = +-1) and per-cuff frames
// Fr_k sending the imaginary axis onto axis(X_k).  An edge gluing slot (u,i)
// to (v,j) with twist t identifies the two cuffs through
// Fr_u[i] * half_turn * axis_shift(t) * Fr_v[j]^-1.

namespace onesys::srf {

using mob::Axis;
using mob::Mat;
using wrd::Word;

struct Slot {
    int v = 0; // pants index
    int k = 0; // cuff slot, 0..2
};

inline bool operator==(const Slot& a, const Slot& b) {
    return a.v == b.v && a.k == b.k;
}
inline bool operator!=(const Slot& a, const Slot& b) { return !(a == b); }
inline bool operator<(const Slot& a, const Slot& b) {
    return a.v != b.v ? a.v < b.v : a.k < b.k;
}

struct PantsGraph {
    int vertices = 0;
    std::vector<std::pair<Slot, Slot>> edges; // every slot used exactly once

    int genus() const {
        return static_cast<int>(edges.size()) - vertices + 1;
    }
    int edge_at(const Slot& s) const; // index of the edge using slot s
};

int euler_characteristic(const PantsGraph& p); // 2 - 2g
int abs_chi(const PantsGraph& p);              // 2g - 2

enum class Scheme {
    linear,         // chain of pants with a handle at each end
    standard_chain, // cyclic necklace of pants
};

PantsGraph build_pants_graph(int genus, Scheme scheme);
// custom pairing table; validates slots, counts, connectivity
PantsGraph build_pants_graph(int vertices,
                             std::vector<std::pair<Slot, Slot>> table);

// Lengths and twists are decimal strings so every numeric backend reads the
// identical value and serialization round-trips byte for byte.
struct FNCoords {
    std::vector<std::string> lengths; // per edge, > 0
    std::vector<std::string> twists;  // per edge, in [0, length)
};

FNCoords short_metric(const PantsGraph& p, double epsilon = 0.05,
                      std::uint64_t seed = 0);

struct MarkedMulticurve {
    std::vector<int> edges; // sorted, distinct, nonempty subset of edge ids
};

MarkedMulticurve all_edges_multicurve(const PantsGraph& p);
void validate(const MarkedMulticurve& c, const PantsGraph& p);

// --------------------------------------------------------------------------
// Gluing combinatorics, computed once per graph with integer arithmetic only.

struct TreeLink {
    int edge = -1;
    Slot up;   // slot on the parent pants
    Slot down; // slot on the child pants, the slot it was entered through
};

// An atom is one of the matrices the developed picture is built from: the
// cuff translation at a kept slot, or the stable letter of a co-tree edge.
struct Atom {
    bool stable = false; // false: cuff at .slot, true: co-tree letter of .edge
    Slot slot;
    int edge = -1;
};

struct Gluing {
    std::vector<char> in_tree;                   // per edge
    std::vector<std::optional<TreeLink>> parent; // per vertex, root 0 empty
    std::vector<int> bfs_order;                  // discovery order, starts at 0
    std::vector<Slot> cactus; // slot circuit whose cuff product is +-1

    std::vector<Atom> atoms;        // atom ids are 1..atoms.size()
    std::vector<int> relator_atoms; // signed atom ids, length 4g

    // definition of each standard generator (letters 1..2g) over atom ids
    std::vector<std::vector<int>> gen_atoms;

    std::vector<Slot> cuff_side;               // per edge, the side spelled out
    std::vector<std::vector<int>> cuff_atoms;  // per edge, word over atom ids
    std::vector<Word> cuff_words;              // per edge, standard letters
};

Gluing analyze_gluing(const PantsGraph& p);

// --------------------------------------------------------------------------
// Matrix layer.

// acosh of the hexagon side relation: distance between the axes of two cuffs
// of a pair of pants with boundary lengths la, lb (third cuff lc)
template <class B> B seam_length(const B& la, const B& lb, const B& lc) {
    B cha = num::cosh(la / B(2)), chb = num::cosh(lb / B(2));
    B sha = num::sinh(la / B(2)), shb = num::sinh(lb / B(2));
    return num::acosh_ge1((num::cosh(lc / B(2)) + cha * chb) / (sha * shb));
}

// cuff translations and frames of one pair of pants with boundary lengths l
template <class B> struct PantsLocal {
    std::array<Mat<B>, 3> X;
    std::array<Mat<B>, 3> Fr;
};

template <class B> PantsLocal<B> pants_local(const std::array<B, 3>& l);

// everything the holonomy evaluation produces for one backend
template <class B> struct Developed {
    std::vector<PantsLocal<B>> loc; // per pants
    std::vector<Mat<B>> place;      // per pants: conjugator into the surface
    std::vector<Mat<B>> atom;       // per atom id-1
    std::vector<Mat<B>> gen;        // per standard letter 1..2g at index l-1

    Mat<B> of_letter(int letter) const {
        return letter > 0 ? gen[letter - 1] : gen[-letter - 1].adj();
    }
    Mat<B> of_word(const Word& w) const {
        return mob::chain_product<B>(
            0, w.size(), [&](size_t i) { return of_letter(w[i]); });
    }
    Mat<B> of_atoms(const std::vector<int>& w) const {
        return mob::chain_product<B>(0, w.size(), [&](size_t i) {
            return w[i] > 0 ? atom[w[i] - 1] : atom[-w[i] - 1].adj();
        });
    }
};

template <class B>
Developed<B> develop(const PantsGraph& p, const Gluing& g, const FNCoords& fn);

// --------------------------------------------------------------------------
// SurfaceGroup: immutable bundle of graph + metric + combinatorics, with a
// per-precision cache of the matrix layer.  Construction certifies the
// defining invariants (relator maps to +-identity, cuff word translation
// lengths match their FN lengths) on the precision ladder.

class SurfaceGroup {
  public:
    SurfaceGroup(PantsGraph p, FNCoords fn);

    int genus() const { return p_.genus(); }
    const PantsGraph& graph() const { return p_; }
    const FNCoords& fn() const { return fn_; }
    const Gluing& gluing() const { return glue_; }
    const wrd::Group& group() const { return group_; }

    const Word& cuff_word(int edge) const { return glue_.cuff_words[edge]; }

    // cached per backend and, for MpIv, per working precision
    template <class B> const Developed<B>& developed() const;

    template <class B> Mat<B> matrix_of(const Word& w) const {
        return developed<B>().of_word(w);
    }
    template <class B> Mat<B> cuff_matrix(int edge) const {
        return developed<B>().of_word(glue_.cuff_words[edge]);
    }

  private:
    void certify() const;

    PantsGraph p_;
    FNCoords fn_;
    Gluing glue_;
    wrd::Group group_;

    mutable std::mutex mu_;
    mutable std::optional<Developed<num::DBall>> dcache_;
    mutable std::map<int, Developed<num::MpIv>> mcache_;
};

template <class B> const Developed<B>& SurfaceGroup::developed() const {
    std::lock_guard<std::mutex> lock(mu_);
    if constexpr (std::is_same_v<B, num::DBall>) {
        if (!dcache_) dcache_ = develop<B>(p_, glue_, fn_);
        return *dcache_;
    } else {
        int bits = num::current_bits();
        auto it = mcache_.find(bits);
        if (it == mcache_.end())
            it = mcache_.emplace(bits, develop<B>(p_, glue_, fn_)).first;
        return it->second;
    }
}

} // namespace onesys::srf
