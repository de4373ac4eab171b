#pragma once

// Planar diagrams of knots. A diagram is a list of crossings X(a,b,c,d):
// arc labels read counterclockwise starting from the incoming under-strand.
// Labels run 1..2n and increase along the strand direction (wrapping at 2n);
// diagrams violating that labeling are rejected rather than re-labeled, since
// silent re-labeling can flip crossing signs invisibly.
//
// Crossing sign: the over-strand runs b->d or d->b, decided by label
// succession. Over running d->b gives +1, b->d gives -1. The choice is locked
// by the braid tests: diagrams built from braid words must carry signs equal
// to the braid letters.

#include "knotinv/exactnum.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

namespace knotinv {

struct Crossing {
    std::array<long long, 4> arc;  // (a, b, c, d)

    friend bool operator==(const Crossing& x, const Crossing& y) { return x.arc == y.arc; }
};

struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }

    std::string joined() const {
        std::string s;
        for (const auto& i : issues) {
            if (!s.empty()) s += "; ";
            s += i;
        }
        return s;
    }
};

namespace detail {

inline long long succ_arc(long long x, long long n_arcs) { return x % n_arcs + 1; }

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Derives per-crossing signs; appends issues instead of throwing so that
// validate() can report everything at once.
inline std::vector<int> derive_signs(const std::vector<Crossing>& cr, ValidationReport& rep) {
    const long long n = static_cast<long long>(cr.size());
    const long long arcs = 2 * n;
    std::vector<int> signs(cr.size(), 0);
    for (size_t idx = 0; idx < cr.size(); ++idx) {
        const long long a = cr[idx].arc[0], b = cr[idx].arc[1];
        const long long c = cr[idx].arc[2], d = cr[idx].arc[3];
        std::string at = "crossing " + std::to_string(idx + 1);
        if (c != succ_arc(a, arcs)) {
            rep.issues.push_back(at + ": under-strand labels " + std::to_string(a) + "->" +
                                 std::to_string(c) + " do not follow label order");
            continue;
        }
        bool b_to_d = succ_arc(b, arcs) == d;
        bool d_to_b = succ_arc(d, arcs) == b;
        if (n == 1) {
            // 2n = 2 makes both succession tests true; the under-strand
            // passage pins the over direction instead: the arc leaving the
            // under-strand (label c) must enter the over-strand next.
            b_to_d = (b == c);
            d_to_b = (d == c);
        }
        if (b_to_d == d_to_b) {
            rep.issues.push_back(at + ": over-strand labels " + std::to_string(b) + "," +
                                 std::to_string(d) + " do not follow label order");
            continue;
        }
        signs[idx] = d_to_b ? +1 : -1;
    }
    return signs;
}

}  // namespace detail

// Structural validation of a raw crossing list: label multiplicity, link
// component count, label-order consistency (which also yields the signs).
inline ValidationReport validate_crossings(const std::vector<Crossing>& cr) {
    ValidationReport rep;
    const long long n = static_cast<long long>(cr.size());
    if (n == 0) {
        rep.issues.push_back("empty diagram (use the token U for the unknot)");
        return rep;
    }
    const long long arcs = 2 * n;
    std::vector<int> count(static_cast<size_t>(arcs) + 1, 0);
    bool labels_ok = true;
    for (const auto& x : cr)
        for (long long v : x.arc) {
            if (v < 1 || v > arcs) {
                rep.issues.push_back("arc label " + std::to_string(v) + " outside 1.." +
                                     std::to_string(arcs));
                labels_ok = false;
            } else {
                ++count[static_cast<size_t>(v)];
            }
        }
    if (labels_ok)
        for (long long v = 1; v <= arcs; ++v)
            if (count[static_cast<size_t>(v)] != 2) {
                rep.issues.push_back("arc label " + std::to_string(v) + " appears " +
                                     std::to_string(count[static_cast<size_t>(v)]) +
                                     " times (expected 2)");
                labels_ok = false;
            }
    if (!labels_ok) return rep;

    // Count link components: each passage keeps its two arcs on one strand.
    detail::UnionFind uf(static_cast<int>(arcs) + 1);
    for (const auto& x : cr) {
        uf.unite(static_cast<int>(x.arc[0]), static_cast<int>(x.arc[2]));
        uf.unite(static_cast<int>(x.arc[1]), static_cast<int>(x.arc[3]));
    }
    int comps = 0;
    for (long long v = 1; v <= arcs; ++v)
        if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++comps;
    if (comps > 1) {
        rep.issues.push_back("links unsupported: diagram has " + std::to_string(comps) +
                             " components");
        return rep;
    }

    detail::derive_signs(cr, rep);
    return rep;
}

class PlanarDiagram {
public:
    // Default-constructed diagram is the unknot (zero crossings).
    PlanarDiagram() = default;

    static PlanarDiagram unknot() { return PlanarDiagram(); }

    static PlanarDiagram from_crossings(std::vector<Crossing> cr) {
        ValidationReport rep = validate_crossings(cr);
        if (!rep.ok()) throw input_error("invalid diagram: " + rep.joined());
        PlanarDiagram d;
        d.unknot_ = false;
        d.crossings_ = std::move(cr);
        ValidationReport ignore;
        d.signs_ = detail::derive_signs(d.crossings_, ignore);
        return d;
    }

    // Grammar: comma-separated X(a,b,c,d) tuples, whitespace-insensitive;
    // the single token "U" denotes the unknot.
    static PlanarDiagram parse(const std::string& text) {
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_ws();
        if (i < text.size() && (text[i] == 'U' || text[i] == 'u')) {
            ++i;
            skip_ws();
            if (i != text.size()) throw input_error("PD syntax: trailing input after U");
            return unknot();
        }
        std::vector<Crossing> cr;
        auto expect = [&](char ch) {
            skip_ws();
            if (i >= text.size() || text[i] != ch)
                throw input_error(std::string("PD syntax: expected '") + ch + "'");
            ++i;
        };
        auto number = [&]() -> long long {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw input_error("PD syntax: expected arc label");
            return std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10);
        };
        for (;;) {
            skip_ws();
            if (i >= text.size()) break;
            if (text[i] != 'X' && text[i] != 'x') throw input_error("PD syntax: expected 'X'");
            ++i;
            expect('(');
            Crossing x{};
            for (int k = 0; k < 4; ++k) {
                x.arc[static_cast<size_t>(k)] = number();
                if (k < 3) expect(',');
            }
            expect(')');
            cr.push_back(x);
            skip_ws();
            if (i < text.size()) {
                expect(',');
                skip_ws();
                if (i >= text.size()) throw input_error("PD syntax: trailing comma");
            }
        }
        if (cr.empty()) throw input_error("empty diagram (use the token U for the unknot)");
        return from_crossings(std::move(cr));
    }

    bool is_unknot() const { return unknot_; }
    size_t size() const { return crossings_.size(); }
    long long arc_count() const { return 2 * static_cast<long long>(crossings_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<int>& signs() const { return signs_; }

    long long writhe() const {
        long long w = 0;
        for (int s : signs_) w += s;
        return w;
    }

    // Swap over/under at every crossing. The tuple is rotated so the new
    // under-strand comes first while the counterclockwise reading stays
    // intact; labels remain in strand order, and every sign flips.
    PlanarDiagram mirrored() const {
        if (unknot_) return *this;
        std::vector<Crossing> out;
        out.reserve(crossings_.size());
        for (size_t idx = 0; idx < crossings_.size(); ++idx) {
            const auto& t = crossings_[idx].arc;
            if (signs_[idx] > 0)
                out.push_back(Crossing{{t[3], t[0], t[1], t[2]}});
            else
                out.push_back(Crossing{{t[1], t[2], t[3], t[0]}});
        }
        return from_crossings(std::move(out));
    }

    std::string str() const {
        if (unknot_) return "U";
        std::string s;
        for (const auto& x : crossings_) {
            if (!s.empty()) s += ",";
            s += "X(" + std::to_string(x.arc[0]) + "," + std::to_string(x.arc[1]) + "," +
                 std::to_string(x.arc[2]) + "," + std::to_string(x.arc[3]) + ")";
        }
        return s;
    }

private:
    std::vector<Crossing> crossings_;
    std::vector<int> signs_;
    bool unknot_ = true;
};

// Runs the structural checks against an already-built diagram (always clean
// for diagrams constructed through the validating paths).
inline ValidationReport validate(const PlanarDiagram& d) {
    if (d.is_unknot()) return {};
    return validate_crossings(d.crossings());
}

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // nonzero; letter g means generator g, -g its inverse
};

// Grammar: "strands: k; word: 1,-2,1,-2" (word may be empty).
inline BraidWord parse_braid(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto keyword = [&](const std::string& kw) {
        skip_ws();
        if (text.compare(i, kw.size(), kw) != 0)
            throw input_error("braid syntax: expected '" + kw + "'");
        i += kw.size();
        skip_ws();
        if (i >= text.size() || text[i] != ':') throw input_error("braid syntax: expected ':'");
        ++i;
    };
    auto integer = [&]() -> long long {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw input_error("braid syntax: expected integer");
        return std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10);
    };
    BraidWord b;
    keyword("strands");
    long long s = integer();
    if (s < 1) throw input_error("braid: strand count must be positive");
    b.strands = static_cast<int>(s);
    skip_ws();
    if (i >= text.size() || text[i] != ';') throw input_error("braid syntax: expected ';'");
    ++i;
    keyword("word");
    skip_ws();
    while (i < text.size()) {
        long long l = integer();
        if (l == 0) throw input_error("braid: letter 0 is not a generator");
        if (std::abs(l) >= b.strands)
            throw input_error("braid: generator " + std::to_string(l) + " needs more strands");
        b.letters.push_back(static_cast<int>(l));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw input_error("braid syntax: expected ','");
            ++i;
            skip_ws();
            if (i >= text.size()) throw input_error("braid syntax: trailing comma");
        }
    }
    return b;
}

// Trace closure of a braid word as a planar diagram. Positive letter g: the
// strand entering at column g+1 passes over the one at column g (that makes
// the closure's crossing sign equal the letter sign). Arc labels are assigned
// by walking the closed strand, so the resulting PD parses back with the same
// signs.
inline PlanarDiagram braid_to_pd(const BraidWord& b) {
    const int L = static_cast<int>(b.letters.size());
    if (L == 0) {
        if (b.strands == 1) return PlanarDiagram::unknot();
        throw input_error("links unsupported: empty braid closure has " +
                          std::to_string(b.strands) + " components");
    }
    // Closure components = cycles of the braid permutation.
    std::vector<int> perm(static_cast<size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : b.letters) {
        int g = std::abs(l) - 1;
        std::swap(perm[static_cast<size_t>(g)], perm[static_cast<size_t>(g) + 1]);
    }
    {
        std::vector<bool> seen(static_cast<size_t>(b.strands), false);
        int cycles = 0;
        for (int s = 0; s < b.strands; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            ++cycles;
            for (int t = s; !seen[static_cast<size_t>(t)]; t = perm[static_cast<size_t>(t)])
                seen[static_cast<size_t>(t)] = true;
        }
        if (cycles != 1)
            throw input_error("links unsupported: braid closure has " + std::to_string(cycles) +
                              " components");
    }

    struct Passage {
        long long in = 0, out = 0;
        bool seen = false;
    };
    std::vector<Passage> under(static_cast<size_t>(L)), over(static_cast<size_t>(L));
    const long long total_arcs = 2LL * L;
    long long arc = 1;
    int col = 1, row = 0;
    for (long long step = 0; step < total_arcs; ++step) {
        // Find the next crossing at or below `row` involving this column,
        // wrapping through the closure back to the top.
        int found = -1;
        for (int r = row; r < L; ++r) {
            int g = std::abs(b.letters[static_cast<size_t>(r)]);
            if (g == col || g + 1 == col) {
                found = r;
                break;
            }
        }
        if (found < 0)
            for (int r = 0; r < row; ++r) {
                int g = std::abs(b.letters[static_cast<size_t>(r)]);
                if (g == col || g + 1 == col) {
                    found = r;
                    break;
                }
            }
        if (found < 0) throw internal_error("braid walk: dangling strand");
        int letter = b.letters[static_cast<size_t>(found)];
        int g = std::abs(letter);
        bool entering_left = (col == g);
        bool is_over = (letter > 0) ? !entering_left : entering_left;
        Passage& p = is_over ? over[static_cast<size_t>(found)] : under[static_cast<size_t>(found)];
        p.in = arc;
        p.out = arc % total_arcs + 1;
        p.seen = true;
        arc = p.out;
        col = entering_left ? g + 1 : g;
        row = found + 1;
        if (row == L) {
            row = 0;  // through the closure
        }
    }

    std::vector<Crossing> cr;
    cr.reserve(static_cast<size_t>(L));
    for (int r = 0; r < L; ++r) {
        const Passage& u = under[static_cast<size_t>(r)];
        const Passage& o = over[static_cast<size_t>(r)];
        if (!u.seen || !o.seen) throw internal_error("braid walk: incomplete crossing");
        if (b.letters[static_cast<size_t>(r)] > 0)
            cr.push_back(Crossing{{u.in, o.out, u.out, o.in}});
        else
            cr.push_back(Crossing{{u.in, o.in, u.out, o.out}});
    }
    return PlanarDiagram::from_crossings(std::move(cr));
}

}  // namespace knotinv
