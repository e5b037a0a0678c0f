#include "onesys/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace onesys::wrd {

Word reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (x == 0) continue;
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word cyclic_reduce(Word w) {
    w = reduce(std::move(w));
    size_t i = 0, j = w.size();
    while (j > i + 1 && w[i] == -w[j - 1]) {
        ++i;
        --j;
    }
    return Word(w.begin() + i, w.begin() + j);
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return reduce(std::move(out));
}

std::string show(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        int x = w[i];
        int v = x > 0 ? x : -x;
        char base = (v % 2 == 1) ? 'a' : 'b';
        if (x < 0) base = static_cast<char>(std::toupper(base));
        if (i) os << ' ';
        os << base << (v + 1) / 2;
    }
    return os.str();
}

Word parse(const std::string& text, int genus) {
    Word out;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == '.' || text[i] == '*') {
            ++i;
            continue;
        }
        char c = text[i];
        bool inv = std::isupper(static_cast<unsigned char>(c));
        char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (base != 'a' && base != 'b')
            throw IoFailure("bad word letter '" + std::string(1, c) + "' in: " + text);
        ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == i) throw IoFailure("missing generator index in: " + text);
        int idx = std::stoi(text.substr(i, j - i));
        if (idx < 1 || idx > genus)
            throw IoFailure("generator index out of range in: " + text);
        int letter = base == 'a' ? a(idx) : b(idx);
        out.push_back(inv ? -letter : letter);
        i = j;
    }
    return out;
}

Word relator(int genus) {
    Word r;
    for (int i = 1; i <= genus; ++i) {
        r.push_back(a(i));
        r.push_back(b(i));
        r.push_back(-a(i));
        r.push_back(-b(i));
    }
    return r;
}

bool word_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return letter_rank(u[i]) < letter_rank(v[i]);
    return false;
}

Group::Group(int genus) : genus_(genus) {
    if (genus < 2) throw MalformedPairing("surface group needs genus >= 2");
    Word r = relator(genus);
    for (const Word& base : {r, inverse(r)}) {
        Word d = base;
        for (size_t k = 0; k < base.size(); ++k) {
            rots_.push_back(d);
            std::rotate(d.begin(), d.begin() + 1, d.end());
        }
    }
}

namespace {

bool match_at(const Word& w, size_t i, const Word& rot, size_t m, bool cyclic) {
    size_t n = w.size();
    for (size_t k = 0; k < m; ++k) {
        size_t idx = i + k;
        if (cyclic)
            idx %= n;
        else if (idx >= n)
            return false;
        if (w[idx] != rot[k]) return false;
    }
    return true;
}

} // namespace

// one longest-match replacement of a relator subword longer than half
bool Group::dehn_step(Word& w, bool cyclic) const {
    size_t L = static_cast<size_t>(relator_length());
    size_t n = w.size();
    if (n == 0) return false;
    size_t mmax = std::min(n, L - 1);
    for (size_t m = mmax; m * 2 > L; --m) {
        size_t limit = cyclic ? n : (n >= m ? n - m + 1 : 0);
        for (size_t i = 0; i < limit; ++i) {
            for (const Word& rot : rots_) {
                if (!match_at(w, i, rot, m, cyclic)) continue;
                Word repl = inverse(Word(rot.begin() + m, rot.end()));
                Word next;
                if (cyclic) {
                    // rotate so the match starts at 0, then substitute
                    Word r = w;
                    std::rotate(r.begin(), r.begin() + static_cast<long>(i),
                                r.end());
                    next = repl;
                    next.insert(next.end(), r.begin() + static_cast<long>(m),
                                r.end());
                    next = cyclic_reduce(std::move(next));
                } else {
                    next.assign(w.begin(), w.begin() + static_cast<long>(i));
                    next.insert(next.end(), repl.begin(), repl.end());
                    next.insert(next.end(), w.begin() + static_cast<long>(i + m),
                                w.end());
                    next = reduce(std::move(next));
                }
                w = std::move(next);
                return true;
            }
        }
    }
    return false;
}

Word Group::dehn(Word w) const {
    w = reduce(std::move(w));
    while (dehn_step(w, false)) {
    }
    return w;
}

// all half-relator substitutions applicable to the cyclic word
std::vector<std::pair<Word, Word>> Group::half_swaps(const Word& cyc) const {
    std::vector<std::pair<Word, Word>> out;
    size_t L = static_cast<size_t>(relator_length());
    size_t m = L / 2;
    size_t n = cyc.size();
    if (n < m) return out;
    for (size_t i = 0; i < n; ++i) {
        for (const Word& rot : rots_) {
            if (!match_at(cyc, i, rot, m, true)) continue;
            Word r = cyc;
            std::rotate(r.begin(), r.begin() + static_cast<long>(i), r.end());
            Word next = inverse(Word(rot.begin() + m, rot.end()));
            next.insert(next.end(), r.begin() + static_cast<long>(m), r.end());
            out.emplace_back(cyclic_reduce(std::move(next)), rot);
        }
    }
    return out;
}

std::vector<Word> Group::geodesic_cyclic_orbit(const Word& w) const {
    Word start = cyclic_reduce(dehn(w));
    for (;;) {
        Word c = start;
        bool shrunk = true;
        while (shrunk) {
            shrunk = dehn_step(c, true);
            c = cyclic_reduce(std::move(c));
        }
        start = c;

        auto rotation_min = [](Word v) {
            Word best = v;
            for (size_t k = 1; k < v.size(); ++k) {
                std::rotate(v.begin(), v.begin() + 1, v.end());
                if (word_less(v, best)) best = v;
            }
            return best;
        };

        std::set<Word> seen;
        std::vector<Word> queue{rotation_min(start)};
        seen.insert(queue[0]);
        bool restarted = false;
        while (!queue.empty()) {
            Word cur = queue.back();
            queue.pop_back();
            for (auto& [next, rot] : half_swaps(cur)) {
                (void)rot;
                if (next.size() < cur.size()) {
                    // a swap exposed a further Dehn reduction; restart shorter
                    start = next;
                    restarted = true;
                    break;
                }
                Word key = rotation_min(next);
                if (seen.insert(key).second) queue.push_back(key);
            }
            if (restarted) break;
            if (seen.size() > 200000)
                throw ConstructionFailed("conjugacy orbit explosion for: " +
                                         show(w));
        }
        if (restarted) continue;
        return std::vector<Word>(seen.begin(), seen.end());
    }
}

Word Group::conjugacy_canonical(const Word& w) const {
    std::vector<Word> orbit = geodesic_cyclic_orbit(w);
    if (orbit.empty() || orbit[0].empty()) return {};
    Word best;
    bool first = true;
    for (const Word& o : orbit) {
        Word v = o;
        for (size_t k = 0; k < o.size(); ++k) {
            if (first || word_less(v, best)) {
                best = v;
                first = false;
            }
            std::rotate(v.begin(), v.begin() + 1, v.end());
        }
    }
    return best;
}

Word Group::unoriented_canonical(const Word& w) const {
    Word f = conjugacy_canonical(w);
    Word r = conjugacy_canonical(inverse(w));
    return word_less(r, f) ? r : f;
}

bool Group::conjugate(const Word& u, const Word& v) const {
    return conjugacy_canonical(u) == conjugacy_canonical(v);
}

bool Group::equal(const Word& u, const Word& v) const {
    return is_trivial(concat(u, inverse(v)));
}

bool Group::is_proper_power(const Word& w) const {
    std::vector<Word> orbit = geodesic_cyclic_orbit(w);
    for (const Word& o : orbit) {
        size_t n = o.size();
        if (n == 0) return false;
        Word v = o;
        for (size_t k = 0; k < n; ++k) {
            for (size_t d = 1; d * 2 <= n; ++d) {
                if (n % d != 0) continue;
                bool power = true;
                for (size_t i = d; i < n && power; ++i)
                    power = v[i] == v[i % d];
                if (power) return true;
            }
            std::rotate(v.begin(), v.begin() + 1, v.end());
        }
    }
    return false;
}

std::optional<int> Group::power_in(const Word& u, const Word& v, int kmax) const {
    if (is_trivial(v)) return 0;
    Word pos, neg;
    Word ui = inverse(u);
    for (int k = 1; k <= kmax; ++k) {
        pos = concat(pos, u);
        neg = concat(neg, ui);
        if (equal(pos, v)) return k;
        if (equal(neg, v)) return -k;
    }
    return std::nullopt;
}

} // namespace onesys::wrd
