#include "matchbox/rooted.hpp"

#include <algorithm>
#include <functional>

#include "matchbox/errors.hpp"

namespace matchbox {

RootedTree RootedTree::make(const std::string& dec, std::vector<Child> children,
                            const Alphabet& omega) {
    for (const auto& [t, sub] : children) {
        (void)sub;
        if (!omega.contains(t))
            throw alphabet_mismatch("edge type '" + t + "' not in the type alphabet");
    }
    std::stable_sort(children.begin(), children.end(),
                     [&omega](const Child& a, const Child& b) {
                         const int ra = omega.rank(a.first);
                         const int rb = omega.rank(b.first);
                         if (ra != rb) return ra < rb;
                         return a.second.encode() < b.second.encode();
                     });
    auto n = std::make_shared<Node>();
    n->dec = dec;
    n->ch = std::move(children);
    for (const auto& [t, sub] : n->ch) {
        (void)t;
        n->nverts += sub.vertices();
    }
    if (n->ch.empty()) {
        n->enc = "R(" + dec + ")";
    } else {
        std::string enc = "R(" + dec + ";[";
        bool first = true;
        for (const auto& [t, sub] : n->ch) {
            if (!first) enc += ",";
            first = false;
            enc += t + ":" + sub.encode();
        }
        enc += "])";
        n->enc = std::move(enc);
    }
    RootedTree out;
    out.n_ = std::move(n);
    return out;
}

RootedTree RootedTree::vertex(const std::string& dec) {
    auto n = std::make_shared<Node>();
    n->dec = dec;
    n->enc = "R(" + dec + ")";
    RootedTree out;
    out.n_ = std::move(n);
    return out;
}

namespace {

// Rebuilds t with `sub` attached under the preorder-index target. `next` is
// the preorder index of the current root on entry and is advanced past the
// subtree on exit. Returns whether the target was found in this subtree.
bool graft_walk(const RootedTree& t, int target, int& next, const RootedTree& sub,
                const std::string& etype, const Alphabet& omega, RootedTree& out) {
    const int me = next++;
    if (me == target) {
        auto children = t.children();
        children.emplace_back(etype, sub);
        out = RootedTree::make(t.dec(), std::move(children), omega);
        return true;
    }
    auto children = t.children();
    for (auto& [ct, csub] : children) {
        (void)ct;
        RootedTree replaced = csub;
        if (graft_walk(csub, target, next, sub, etype, omega, replaced)) {
            csub = replaced;
            out = RootedTree::make(t.dec(), std::move(children), omega);
            return true;
        }
    }
    return false;
}

} // namespace

RootedTree graft_rooted_at(const RootedTree& t, int v, const RootedTree& sub,
                           const std::string& etype, const Alphabet& omega) {
    if (v < 0 || v >= t.vertices())
        throw invalid_vertex("vertex index " + std::to_string(v) + " out of range for a tree with " +
                             std::to_string(t.vertices()) + " vertices");
    int next = 0;
    RootedTree out = t;
    graft_walk(t, v, next, sub, etype, omega, out);
    return out;
}

bool validate_rooted(const RootedTree& t, const Alphabet& dec, const Alphabet& omega) {
    if (!dec.contains(t.dec())) return false;
    for (const auto& [et, sub] : t.children()) {
        if (!omega.contains(et)) return false;
        if (!validate_rooted(sub, dec, omega)) return false;
    }
    return true;
}

std::vector<RootedTree> enumerate_rooted(int n, const Alphabet& dec, const Alphabet& omega) {
    require_omega(omega);
    if (n < 1) throw config_error("rooted trees have at least one vertex");

    std::vector<std::vector<RootedTree>> by_size(static_cast<std::size_t>(n) + 1);
    for (const auto& d : dec.symbols()) by_size[1].push_back(RootedTree::vertex(d));

    for (int m = 2; m <= n; ++m) {
        // Candidate children of any size < m, sorted by canonical child key so
        // that combinations taken with non-decreasing item index are exactly
        // the canonical child lists (no isomorph generated twice).
        struct Item {
            std::string etype;
            RootedTree sub;
            int size;
        };
        std::vector<Item> items;
        for (int k = 1; k < m; ++k)
            for (const auto& t : omega.symbols())
                for (const auto& sub : by_size[static_cast<std::size_t>(k)])
                    items.push_back(Item{t, sub, k});
        std::sort(items.begin(), items.end(), [&omega](const Item& a, const Item& b) {
            const int ra = omega.rank(a.etype);
            const int rb = omega.rank(b.etype);
            if (ra != rb) return ra < rb;
            return a.sub.encode() < b.sub.encode();
        });

        std::vector<RootedTree::Child> picked;
        std::vector<RootedTree>& out = by_size[static_cast<std::size_t>(m)];
        const auto emit = [&](const std::string& d) {
            out.push_back(RootedTree::make(d, picked, omega));
        };
        // Multisets of items with total size m-1, non-decreasing by index.
        const std::function<void(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
            if (remaining == 0) {
                for (const auto& d : dec.symbols()) emit(d);
                return;
            }
            for (std::size_t i = from; i < items.size(); ++i) {
                if (items[i].size > remaining) continue;
                picked.emplace_back(items[i].etype, items[i].sub);
                choose(i, remaining - items[i].size);
                picked.pop_back();
            }
        };
        choose(0, m - 1);
    }
    auto& result = by_size[static_cast<std::size_t>(n)];
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

namespace {

struct RootedParser {
    std::string_view text;
    std::size_t pos = 0;
    const Alphabet& omega;

    char peek() const {
        if (pos >= text.size()) throw parse_error("unexpected end of tree expression");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw parse_error("expected '" + std::string(1, c) + "' at offset " + std::to_string(pos) +
                              " in '" + std::string(text) + "'");
        ++pos;
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    std::string symbol() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size()) {
            const char c = text[pos];
            if (c == '(' || c == ')' || c == ',' || c == ';' || c == ':' || c == '[' ||
                c == ']' || c == '|' || c == ' ' || c == '\t')
                break;
            ++pos;
        }
        if (pos == start) throw parse_error("expected symbol at offset " + std::to_string(start));
        return std::string(text.substr(start, pos - start));
    }

    RootedTree tree() {
        skip_ws();
        const std::string head = symbol();
        if (head != "R") throw parse_error("expected 'R' at offset " + std::to_string(pos));
        expect('(');
        const std::string dec = symbol();
        skip_ws();
        std::vector<RootedTree::Child> children;
        if (peek() == ';') {
            ++pos;
            skip_ws();
            expect('[');
            skip_ws();
            if (peek() != ']') {
                while (true) {
                    const std::string et = symbol();
                    skip_ws();
                    expect(':');
                    children.emplace_back(et, tree());
                    skip_ws();
                    if (peek() == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            skip_ws();
        }
        expect(')');
        return RootedTree::make(dec, std::move(children), omega);
    }
};

} // namespace

RootedTree parse_rooted(std::string_view text, const Alphabet& omega) {
    RootedParser p{text, 0, omega};
    const RootedTree t = p.tree();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("trailing input after tree at offset " + std::to_string(p.pos));
    return t;
}

} // namespace matchbox
