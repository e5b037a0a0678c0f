#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onesys/errors.hpp"

// Words in the genus-g surface group.  Letters are nonzero ints: +k is the
// k-th generator, -k its inverse, with the generator list a1,b1,...,ag,bg
// numbered 1..2g (a_i = 2i-1, b_i = 2i).  Text form: "a1 B2" is a1 * b2^-1.
//
// The standard relator [a1,b1]...[ag,bg] is C'(1/6) small cancellation for
// g >= 2 (all pieces are single letters), so Dehn reduction yields geodesic
// words and cyclic Dehn forms classify conjugacy up to rotation and
// half-relator swaps.

namespace onesys::wrd {

using Word = std::vector<int>;

inline int a(int i) { return 2 * i - 1; }
inline int b(int i) { return 2 * i; }

Word reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v); // freely reduced product

std::string show(const Word& w);
Word parse(const std::string& text, int genus);

Word relator(int genus);

class Group {
  public:
    explicit Group(int genus);

    int genus() const { return genus_; }
    int relator_length() const { return 4 * genus_; }

    // geodesic representative of the same group element
    Word dehn(Word w) const;
    bool is_trivial(const Word& w) const { return dehn(w).empty(); }

    // lexicographically least word over all geodesic cyclic representatives
    // of the conjugacy class
    Word conjugacy_canonical(const Word& w) const;
    Word unoriented_canonical(const Word& w) const;

    bool conjugate(const Word& u, const Word& v) const;
    bool equal(const Word& u, const Word& v) const;

    // syntactic proper-power test over the geodesic conjugacy orbit
    bool is_proper_power(const Word& w) const;

    // k with v == u^k in the group, |k| <= kmax, if any
    std::optional<int> power_in(const Word& u, const Word& v, int kmax) const;

    // all geodesic cyclic representatives (the swap/rotation orbit)
    std::vector<Word> geodesic_cyclic_orbit(const Word& w) const;

  private:
    bool dehn_step(Word& w, bool cyclic) const;
    std::vector<std::pair<Word, Word>> half_swaps(const Word& cyc) const;

    int genus_;
    std::vector<Word> rots_; // cyclic rotations of the relator and its inverse
};

// deterministic letter order for canonical forms: a1 < A1 < b1 < B1 < a2 ...
inline int letter_rank(int letter) {
    int v = letter > 0 ? letter : -letter;
    return 2 * v + (letter < 0 ? 1 : 0);
}

bool word_less(const Word& u, const Word& v);

} // namespace onesys::wrd
