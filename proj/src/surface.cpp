#include "onesys/surface.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace onesys::srf {

namespace {

std::string slot_str(const Slot& s) {
    return std::to_string(s.v) + "." + std::to_string(s.k);
}

std::vector<int> winv(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

// shortest decimal string that parses back to exactly v
std::string shortest_decimal(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::logic_error("to_chars failed");
    return std::string(buf, end);
}

} // namespace

int PantsGraph::edge_at(const Slot& s) const {
    for (size_t ei = 0; ei < edges.size(); ++ei)
        if (edges[ei].first == s || edges[ei].second == s)
            return static_cast<int>(ei);
    throw MalformedPairing("no edge at slot " + slot_str(s));
}

int euler_characteristic(const PantsGraph& p) { return 2 - 2 * p.genus(); }
int abs_chi(const PantsGraph& p) { return 2 * p.genus() - 2; }

PantsGraph build_pants_graph(int vertices,
                             std::vector<std::pair<Slot, Slot>> table) {
    if (vertices < 2)
        throw MalformedPairing("need at least two pairs of pants");
    std::set<Slot> used;
    for (const auto& [a, b] : table) {
        for (const Slot& s : {a, b}) {
            if (s.v < 0 || s.v >= vertices || s.k < 0 || s.k > 2)
                throw MalformedPairing("slot out of range: " + slot_str(s));
            if (!used.insert(s).second)
                throw MalformedPairing("slot used twice: " + slot_str(s));
        }
    }
    if (static_cast<int>(used.size()) != 3 * vertices)
        throw MalformedPairing("unused cuff slots: " +
                               std::to_string(3 * vertices - used.size()));
    // connectivity
    std::vector<char> seen(vertices, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const auto& [a, b] : table) {
            int opp = -1;
            if (a.v == u) opp = b.v;
            else if (b.v == u) opp = a.v;
            if (opp >= 0 && !seen[opp]) {
                seen[opp] = 1;
                q.push_back(opp);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
        throw MalformedPairing("pants graph is disconnected");
    PantsGraph p;
    p.vertices = vertices;
    p.edges = std::move(table);
    return p;
}

PantsGraph build_pants_graph(int genus, Scheme scheme) {
    if (genus < 2) throw MalformedPairing("genus must be at least 2");
    int V = 2 * genus - 2;
    std::vector<std::pair<Slot, Slot>> table;
    if (scheme == Scheme::linear) {
        table.push_back({{0, 0}, {0, 1}});
        for (int v = 0; v + 1 < V; ++v) {
            if (v == 0 || v % 2 == 0)
                table.push_back({{v, 2}, {v + 1, 0}});
            else {
                table.push_back({{v, 1}, {v + 1, 0}});
                table.push_back({{v, 2}, {v + 1, 1}});
            }
        }
        table.push_back({{V - 1, 1}, {V - 1, 2}});
    } else {
        for (int v = 0; v < V; ++v)
            table.push_back({{v, 0}, {(v + 1) % V, 1}});
        for (int j = 0; j < V / 2; ++j)
            table.push_back({{2 * j, 2}, {2 * j + 1, 2}});
    }
    return build_pants_graph(V, std::move(table));
}

FNCoords short_metric(const PantsGraph& p, double epsilon, std::uint64_t seed) {
    if (!(epsilon > 0))
        throw MalformedPairing("short_metric needs epsilon > 0");
    FNCoords fn;
    std::mt19937_64 rng(seed);
    for (size_t e = 0; e < p.edges.size(); ++e) {
        fn.lengths.push_back(shortest_decimal(epsilon));
        double u = static_cast<double>(rng() >> 11) * 0x1p-53;
        fn.twists.push_back(shortest_decimal(u * epsilon));
    }
    return fn;
}

MarkedMulticurve all_edges_multicurve(const PantsGraph& p) {
    MarkedMulticurve c;
    for (size_t e = 0; e < p.edges.size(); ++e)
        c.edges.push_back(static_cast<int>(e));
    return c;
}

void validate(const MarkedMulticurve& c, const PantsGraph& p) {
    if (c.edges.empty())
        throw MalformedPairing("marked multicurve is empty");
    for (size_t i = 0; i < c.edges.size(); ++i) {
        int e = c.edges[i];
        if (e < 0 || e >= static_cast<int>(p.edges.size()))
            throw MalformedPairing("marked edge out of range");
        if (i > 0 && c.edges[i - 1] >= e)
            throw MalformedPairing("marked edges not sorted distinct");
    }
}

// --------------------------------------------------------------------------
// Handle normalization: rewrite a quadratic orientable cyclic word into
// x1 y1 x1^-1 y1^-1 x2 y2 ... while tracking every substitution, so words in
// the original letters can be rewritten over the surviving alphabet and each
// surviving letter can be expanded back into original letters.

namespace {

class HandleNormalizer {
  public:
    explicit HandleNormalizer(std::vector<int> word) : w_(std::move(word)) {
        std::map<int, int> cnt, sgn;
        int mx = 0;
        for (int x : w_) {
            if (x == 0) throw std::logic_error("zero letter");
            cnt[std::abs(x)]++;
            sgn[std::abs(x)] += x > 0 ? 1 : -1;
            mx = std::max(mx, std::abs(x));
        }
        for (const auto& [k, c] : cnt)
            if (c != 2 || sgn[k] != 0)
                throw std::logic_error("word not orientable-quadratic");
        next_ = mx + 1;
    }

    std::vector<std::pair<int, int>> normalize() {
        while (step()) {
        }
        int n = static_cast<int>(w_.size());
        if (n % 4 != 0) throw std::logic_error("normal form length");
        std::set<std::pair<int, int>> bset(blocks_.begin(), blocks_.end());
        for (int s = 0; s < n; ++s) {
            std::vector<int> w(w_.begin() + s, w_.end());
            w.insert(w.end(), w_.begin(), w_.begin() + s);
            std::vector<std::pair<int, int>> order;
            bool ok = true;
            for (int i = 0; i < n && ok; i += 4) {
                int x = w[i], y = w[i + 1];
                ok = x > 0 && y > 0 && w[i + 2] == -x && w[i + 3] == -y &&
                     bset.count({x, y}) != 0;
                if (ok) order.emplace_back(x, y);
            }
            if (ok) {
                rot_to(s);
                return order;
            }
        }
        throw std::logic_error("final word not tiled by handles");
    }

    // rewrite a word over original letters into the surviving alphabet by
    // replaying the eliminations chronologically
    std::vector<int> apply_subs(std::vector<int> w) const {
        for (const auto& [lt, rep] : events_) {
            std::vector<int> out;
            for (int x : w) {
                if (x == lt)
                    out.insert(out.end(), rep.begin(), rep.end());
                else if (x == -lt) {
                    auto r = winv(rep);
                    out.insert(out.end(), r.begin(), r.end());
                } else
                    out.push_back(x);
            }
            w = std::move(out);
        }
        return w;
    }

    // expand a letter into the original alphabet (ids 1..n_orig)
    std::vector<int> definition_of(int k, int n_orig) const {
        if (k <= n_orig) return {k};
        std::vector<int> out;
        for (int x : defs_.at(k)) {
            auto e = definition_of(std::abs(x), n_orig);
            if (x < 0) e = winv(e);
            out.insert(out.end(), e.begin(), e.end());
        }
        return out;
    }

    const std::vector<int>& word() const { return w_; }

  private:
    int fresh(std::vector<int> defword) {
        int k = next_++;
        defs_[k] = std::move(defword);
        return k;
    }

    void eliminate(int letter, std::vector<int> replacement) {
        for (int x : w_)
            if (std::abs(x) == letter)
                throw std::logic_error("eliminated letter still present");
        events_.emplace_back(letter, std::move(replacement));
    }

    // introduce k2 = k^-1 and replace every occurrence
    int rename_neg(int k) {
        int k2 = fresh({-k});
        for (int& x : w_) {
            if (x == -k) x = k2;
            else if (x == k) x = -k2;
        }
        eliminate(k, {-k2});
        return k2;
    }

    void rot_to(int i) {
        std::rotate(w_.begin(), w_.begin() + i, w_.end());
    }

    std::pair<int, int> positions(int k) const {
        int p = -1, q = -1;
        for (int i = 0; i < static_cast<int>(w_.size()); ++i)
            if (std::abs(w_[i]) == k) (p < 0 ? p : q) = i;
        if (q < 0) throw std::logic_error("letter not quadratic");
        return {p, q};
    }

    bool step() {
        std::set<int> present;
        for (int x : w_) present.insert(std::abs(x));
        int n = static_cast<int>(w_.size());
        int a = 0, best_gap = -1;
        for (int k : present) {
            if (done_.count(k)) continue;
            auto [p, q] = positions(k);
            int gap = std::min(((q - p - 1) % n + n) % n,
                               ((p - q - 1) % n + n) % n);
            if (best_gap < 0 || gap < best_gap) {
                best_gap = gap;
                a = k;
            }
        }
        if (a == 0) return false;

        auto [p, q] = positions(a);
        if (w_[p] < 0) std::swap(p, q);
        rot_to(p);
        std::tie(p, q) = positions(a);
        if (p != 0 || w_[0] != a) throw std::logic_error("pivot rotation");
        if (q == 1) throw std::logic_error("freely reducible relator");

        if (q > 2) {
            // pull one letter whose partner lies outside the arc next to the
            // pivot; such a letter exists because the pivot gap is minimal
            std::map<int, int> cnt;
            for (int i = 1; i < q; ++i) cnt[std::abs(w_[i])]++;
            int bpos = -1;
            for (int i = 1; i < q; ++i)
                if (cnt[std::abs(w_[i])] == 1) {
                    bpos = i;
                    break;
                }
            if (bpos < 0) throw std::logic_error("split quadratic word");
            int b = std::abs(w_[bpos]);
            if (w_[bpos] < 0) {
                b = rename_neg(b);
                std::tie(p, q) = positions(a);
                bpos = -1;
                for (int i = 1; i < q; ++i)
                    if (std::abs(w_[i]) == b) {
                        bpos = i;
                        break;
                    }
            }
            if (bpos < 0 || w_[bpos] != b) throw std::logic_error("pull letter");
            int r = -1;
            for (int i = 0; i < n; ++i)
                if (w_[i] == -b) r = i;
            if (r <= q) throw std::logic_error("partner inside arc");
            std::vector<int> X(w_.begin() + 1, w_.begin() + bpos);
            std::vector<int> Y(w_.begin() + bpos + 1, w_.begin() + q);
            std::vector<int> Z(w_.begin() + q + 1, w_.begin() + r);
            std::vector<int> T(w_.begin() + r + 1, w_.end());
            std::vector<int> cdef = X;
            cdef.push_back(b);
            cdef.insert(cdef.end(), Y.begin(), Y.end());
            int c = fresh(cdef);
            std::vector<int> nw{a, c, -a};
            nw.insert(nw.end(), Z.begin(), Z.end());
            nw.insert(nw.end(), Y.begin(), Y.end());
            nw.push_back(-c);
            nw.insert(nw.end(), X.begin(), X.end());
            nw.insert(nw.end(), T.begin(), T.end());
            w_ = std::move(nw);
            std::vector<int> rep = winv(X);
            rep.push_back(c);
            auto yi = winv(Y);
            rep.insert(rep.end(), yi.begin(), yi.end());
            eliminate(b, std::move(rep));
        }

        std::tie(p, q) = positions(a);
        if (p != 0 || q != 2 || w_[0] != a)
            throw std::logic_error("gather failed");
        int cc = w_[1];
        if (cc < 0) {
            rename_neg(std::abs(cc));
            cc = w_[1];
            if (cc < 0) throw std::logic_error("sign normalization");
        }
        int c = cc;
        int m = -1;
        n = static_cast<int>(w_.size());
        for (int i = 0; i < n; ++i)
            if (w_[i] == -c) m = i;
        if (m < 3) throw std::logic_error("missing partner");
        std::vector<int> M(w_.begin() + 3, w_.begin() + m);
        std::vector<int> N(w_.begin() + m + 1, w_.end());
        std::vector<int> ddef{c, -a};
        ddef.insert(ddef.end(), M.begin(), M.end());
        int d = fresh(ddef);
        std::vector<int> nw{-d, c, d, -c};
        nw.insert(nw.end(), N.begin(), N.end());
        nw.insert(nw.end(), M.begin(), M.end());
        w_ = std::move(nw);
        std::vector<int> rep = M;
        rep.push_back(-d);
        rep.push_back(c);
        eliminate(a, std::move(rep));
        int d2 = rename_neg(d);
        if (!(w_[0] == d2 && w_[1] == c && w_[2] == -d2 && w_[3] == -c))
            throw std::logic_error("handle block");
        done_.insert(d2);
        done_.insert(c);
        blocks_.emplace_back(d2, c);
        return true;
    }

    std::vector<int> w_;
    std::vector<std::pair<int, std::vector<int>>> events_;
    std::map<int, std::vector<int>> defs_;
    int next_;
    std::set<int> done_;
    std::vector<std::pair<int, int>> blocks_;
};

} // namespace

// --------------------------------------------------------------------------

Gluing analyze_gluing(const PantsGraph& p) {
    int V = p.vertices;
    int E = static_cast<int>(p.edges.size());
    Gluing g;
    g.in_tree.assign(E, 0);
    g.parent.assign(V, std::nullopt);

    std::map<Slot, int> slot_edge;
    for (int ei = 0; ei < E; ++ei) {
        slot_edge[p.edges[ei].first] = ei;
        slot_edge[p.edges[ei].second] = ei;
    }

    // spanning tree by breadth-first search in edge order
    std::vector<std::vector<std::tuple<int, Slot, Slot>>> adj(V);
    for (int ei = 0; ei < E; ++ei) {
        const auto& [a, b] = p.edges[ei];
        adj[a.v].emplace_back(ei, a, b);
        if (b.v != a.v) adj[b.v].emplace_back(ei, b, a);
    }
    std::vector<char> seen(V, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    g.bfs_order.push_back(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const auto& [ei, us, vs] : adj[u]) {
            if (seen[vs.v]) continue;
            seen[vs.v] = 1;
            q.push_back(vs.v);
            g.bfs_order.push_back(vs.v);
            g.in_tree[ei] = 1;
            g.parent[vs.v] = TreeLink{ei, us, vs};
        }
    }

    auto other_side = [&](int ei, const Slot& s) {
        const auto& [a, b] = p.edges[ei];
        return a == s ? b : a;
    };
    auto is_downlink = [&](const Slot& s, int ei) {
        Slot child = other_side(ei, s);
        const auto& par = g.parent[child.v];
        return par && par->edge == ei && par->down == child;
    };

    // circuit around the tree: visiting each pants' free slots in the fixed
    // 2,1,0 rotation yields a cyclic word of cuffs multiplying to +-1
    auto expand = [&](auto&& self, int v, int entered) -> std::vector<Slot> {
        std::vector<int> ks{2, 1, 0};
        if (entered >= 0)
            while (ks.back() != entered)
                std::rotate(ks.begin(), ks.begin() + 1, ks.end());
        std::vector<Slot> out;
        int take = entered >= 0 ? 2 : 3;
        for (int t = 0; t < take; ++t) {
            Slot s{v, ks[t]};
            int ei = slot_edge.at(s);
            if (g.in_tree[ei] && is_downlink(s, ei)) {
                Slot child = other_side(ei, s);
                auto sub = self(self, child.v, child.k);
                out.insert(out.end(), sub.begin(), sub.end());
            } else {
                out.push_back(s);
            }
        }
        return out;
    };
    g.cactus = expand(expand, 0, -1);

    // kept and eliminated sides of the co-tree edges
    std::map<Slot, int> keep, elim;
    for (int ei = 0; ei < E; ++ei) {
        if (g.in_tree[ei]) continue;
        keep[p.edges[ei].first] = ei;
        elim[p.edges[ei].second] = ei;
    }

    // atoms in order of first use, relator over them
    std::map<std::pair<int, int>, int> ids; // (stable?, slot-or-edge key)
    auto atom_id = [&](bool stable, const Slot& s, int ei) {
        std::pair<int, int> key =
            stable ? std::make_pair(1, ei) : std::make_pair(0, s.v * 3 + s.k);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(g.atoms.size()) + 1;
        ids[key] = id;
        g.atoms.push_back(Atom{stable, s, ei});
        return id;
    };
    for (const Slot& s : g.cactus) {
        if (keep.count(s)) {
            g.relator_atoms.push_back(atom_id(false, s, slot_edge.at(s)));
        } else {
            int ei = elim.at(s);
            Slot uslot = keep.count(p.edges[ei].first) ? p.edges[ei].first
                                                       : p.edges[ei].second;
            int t = atom_id(true, Slot{}, ei);
            int d = atom_id(false, uslot, ei);
            g.relator_atoms.push_back(-t);
            g.relator_atoms.push_back(-d);
            g.relator_atoms.push_back(t);
        }
    }
    int genus = p.genus();
    if (static_cast<int>(g.relator_atoms.size()) != 4 * genus)
        throw std::logic_error("relator length");

    HandleNormalizer norm(g.relator_atoms);
    auto handles = norm.normalize();
    if (static_cast<int>(handles.size()) != genus)
        throw std::logic_error("handle count");

    int n_atoms = static_cast<int>(g.atoms.size());
    std::map<int, int> fin2std;
    g.gen_atoms.resize(2 * genus);
    for (int i = 0; i < genus; ++i) {
        auto [x, y] = handles[i];
        fin2std[x] = 2 * i + 1;
        fin2std[y] = 2 * i + 2;
        // free reduction keeps the matrix chains short enough for interval
        // evaluation; the element is unchanged
        g.gen_atoms[2 * i] = wrd::reduce(norm.definition_of(x, n_atoms));
        g.gen_atoms[2 * i + 1] = wrd::reduce(norm.definition_of(y, n_atoms));
    }
    auto to_std = [&](const std::vector<int>& w) {
        Word out;
        for (int x : w) {
            auto it = fin2std.find(std::abs(x));
            if (it == fin2std.end())
                throw std::logic_error("non-final letter survives");
            out.push_back(x > 0 ? it->second : -it->second);
        }
        return out;
    };
    if (to_std(norm.word()) != wrd::relator(genus))
        throw std::logic_error("normal form is not the standard relator");

    // one word per edge: spell out the cuff on the recorded side by walking
    // the same circuit, so the word evaluates to that cuff's holonomy
    auto slot_word = [&](auto&& self, const Slot& s) -> std::vector<int> {
        int ei = slot_edge.at(s);
        if (g.in_tree[ei] && is_downlink(s, ei)) {
            Slot child = other_side(ei, s);
            std::vector<int> ks{2, 1, 0};
            while (ks.back() != child.k)
                std::rotate(ks.begin(), ks.begin() + 1, ks.end());
            std::vector<int> out;
            for (int t = 0; t < 2; ++t) {
                auto sub = self(self, Slot{child.v, ks[t]});
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        if (keep.count(s)) return {atom_id(false, s, ei)};
        int ei2 = elim.at(s);
        Slot uslot = keep.count(p.edges[ei2].first) ? p.edges[ei2].first
                                                    : p.edges[ei2].second;
        int t = atom_id(true, Slot{}, ei2);
        return {-t, -atom_id(false, uslot, ei2), t};
    };
    g.cuff_side.resize(E);
    g.cuff_atoms.resize(E);
    g.cuff_words.resize(E);
    wrd::Group grp(genus);
    for (int ei = 0; ei < E; ++ei) {
        const auto& [a, b] = p.edges[ei];
        Slot side = g.in_tree[ei] ? (is_downlink(a, ei) ? a : b) : a;
        g.cuff_side[ei] = side;
        g.cuff_atoms[ei] = wrd::reduce(slot_word(slot_word, side));
        // dehn() rewrites through the relator without changing the element,
        // so the dual-route residual check downstream still applies verbatim
        g.cuff_words[ei] = grp.dehn(to_std(norm.apply_subs(g.cuff_atoms[ei])));
        if (g.cuff_words[ei].empty()) throw std::logic_error("empty cuff word");
    }
    if (static_cast<int>(g.atoms.size()) != n_atoms)
        throw std::logic_error("cuff words introduced new atoms");
    return g;
}

// --------------------------------------------------------------------------

template <class B> PantsLocal<B> pants_local(const std::array<B, 3>& l) {
    B d01 = seam_length(l[0], l[1], l[2]);
    Mat<B> X0 = Mat<B>::axis_shift(l[0]);
    Mat<B> S = Mat<B>::seam_shift(d01);
    Mat<B> X1 = S * Mat<B>::axis_shift(-l[1]) * S.adj();
    Mat<B> X2 = (X1 * X0).adj();
    PantsLocal<B> out{{X0, X1, X2}, {}};
    std::array<Axis<B>, 3> ax{mob::axis_of(X0), mob::axis_of(X1),
                              mob::axis_of(X2)};
    for (int k = 0; k < 3; ++k) {
        geo::Hpt<B> foot = geo::perp_foot(ax[k], ax[(k + 1) % 3]);
        Mat<B> m = geo::std_map(ax[k]);
        out.Fr[k] = m * Mat<B>::axis_shift(geo::foot_param(m, foot));
    }
    return out;
}

template <class B>
Developed<B> develop_impl(const PantsGraph& p, const Gluing& g,
                          const FNCoords& fn) {
    int V = p.vertices;
    int E = static_cast<int>(p.edges.size());
    if (static_cast<int>(fn.lengths.size()) != E ||
        static_cast<int>(fn.twists.size()) != E)
        throw MalformedPairing("FN coordinate count != edge count");

    std::vector<B> len, twi;
    for (int ei = 0; ei < E; ++ei) {
        len.push_back(B::from_decimal(fn.lengths[ei]));
        twi.push_back(B::from_decimal(fn.twists[ei]));
        if (num::raw_sign(len.back()) != 1)
            throw MalformedPairing("FN length must be positive (edge " +
                                   std::to_string(ei) + ")");
    }

    Developed<B> d;
    for (int v = 0; v < V; ++v) {
        std::array<B, 3> l{len[p.edge_at({v, 0})], len[p.edge_at({v, 1})],
                           len[p.edge_at({v, 2})]};
        d.loc.push_back(pants_local(l));
    }

    auto glue_step = [&](int ei, const Slot& up, const Slot& down) {
        return d.loc[up.v].Fr[up.k] * Mat<B>::half_turn() *
               Mat<B>::axis_shift(twi[ei]) * d.loc[down.v].Fr[down.k].adj();
    };

    d.place.assign(V, Mat<B>::identity());
    for (int v : g.bfs_order) {
        if (!g.parent[v]) continue;
        const TreeLink& t = *g.parent[v];
        d.place[v] = d.place[t.up.v] * glue_step(t.edge, t.up, t.down);
    }

    for (const Atom& a : g.atoms) {
        if (a.stable) {
            const auto& [us, vs] = p.edges[a.edge];
            d.atom.push_back(d.place[us.v] * glue_step(a.edge, us, vs) *
                             d.place[vs.v].adj());
        } else {
            const Mat<B>& pl = d.place[a.slot.v];
            d.atom.push_back(pl * d.loc[a.slot.v].X[a.slot.k] * pl.adj());
        }
    }

    for (const auto& w : g.gen_atoms) d.gen.push_back(d.of_atoms(w));
    return d;
}

// The development multiplies long matrix chains, so enclosures computed at
// the caller's precision would carry widths far above one ulp.  Padding the
// working precision here makes every cached matrix nearly point-like at the
// precision the caller sees; later products round outward on their own.
template <class B>
Developed<B> develop(const PantsGraph& p, const Gluing& g, const FNCoords& fn) {
    if constexpr (std::is_same_v<B, num::MpIv>) {
        num::ScopedBits pad(2 * num::current_bits() + 64);
        return develop_impl<B>(p, g, fn);
    } else {
        return develop_impl<B>(p, g, fn);
    }
}

template PantsLocal<num::DBall> pants_local(const std::array<num::DBall, 3>&);
template PantsLocal<num::MpIv> pants_local(const std::array<num::MpIv, 3>&);
template Developed<num::DBall> develop(const PantsGraph&, const Gluing&,
                                       const FNCoords&);
template Developed<num::MpIv> develop(const PantsGraph&, const Gluing&,
                                      const FNCoords&);

// --------------------------------------------------------------------------

SurfaceGroup::SurfaceGroup(PantsGraph p, FNCoords fn)
    : p_(std::move(p)), fn_(std::move(fn)), glue_(analyze_gluing(p_)),
      group_(p_.genus()) {
    certify();
}

void SurfaceGroup::certify() const {
    Word rel = wrd::relator(p_.genus());
    num::certified([&](auto zero) {
        using B = decltype(zero);
        const Developed<B>& d = developed<B>();
        B rel_tol = B::from_decimal("1e-20");
        B len_tol = B::from_decimal("1e-10");

        // the relator maps to +-identity; enclosure too wide means retry
        B res = mob::proj_residual(d.of_word(rel), Mat<B>::identity());
        if (num::raw_sign(res - rel_tol) != -1)
            throw NeedMorePrecision{"relator residual"};

        for (size_t ei = 0; ei < p_.edges.size(); ++ei) {
            Mat<B> via_word = d.of_word(glue_.cuff_words[ei]);
            // the generator route and the direct gluing route must agree
            B agree = mob::proj_residual(via_word,
                                         d.of_atoms(glue_.cuff_atoms[ei]));
            if (num::raw_sign(agree - rel_tol) != -1)
                throw NeedMorePrecision{"cuff word route"};
            B tl = mob::translation_length(via_word);
            B err = num::abs(tl - B::from_decimal(fn_.lengths[ei]));
            if (num::raw_sign(err - len_tol) != -1)
                throw NeedMorePrecision{"cuff length"};
        }
        return 0;
    });
}

} // namespace onesys::srf
