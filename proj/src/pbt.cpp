#include "matchbox/pbt.hpp"

#include <algorithm>

#include "matchbox/errors.hpp"

namespace matchbox {

namespace {
const std::string kLeafEncoding = "|";
}

Pbt Pbt::node(const std::string& dec,
              const std::string& ltype, const Pbt& left,
              const std::string& rtype, const Pbt& right) {
    // The empty type marks exactly the leaf edges; a mismatch would make the
    // serialization ambiguous and the dendriform recursion unsound.
    if ((ltype == kEmptyType) != left.is_leaf())
        throw edge_type_mismatch("left edge type '" + ltype + "' inconsistent with " +
                                 (left.is_leaf() ? "leaf" : "internal") + " child");
    if ((rtype == kEmptyType) != right.is_leaf())
        throw edge_type_mismatch("right edge type '" + rtype + "' inconsistent with " +
                                 (right.is_leaf() ? "leaf" : "internal") + " child");

    auto n = std::make_shared<detail::PbtNode>();
    n->dec = dec;
    n->ltype = ltype;
    n->rtype = rtype;
    n->left = left;
    n->right = right;
    n->nverts = 1 + left.vertices() + right.vertices();
    n->depth = 1 + std::max(left.depth(), right.depth());
    n->enc = "B(" + dec + "," + ltype + "," + left.encode() + "," + rtype + "," + right.encode() + ")";
    Pbt t;
    t.n_ = std::move(n);
    return t;
}

const std::string& Pbt::dec() const {
    if (!n_) throw leaf_decomposition("leaf has no decoration");
    return n_->dec;
}
const std::string& Pbt::ltype() const {
    if (!n_) throw leaf_decomposition("leaf has no edges");
    return n_->ltype;
}
const std::string& Pbt::rtype() const {
    if (!n_) throw leaf_decomposition("leaf has no edges");
    return n_->rtype;
}
const Pbt& Pbt::left() const {
    if (!n_) throw leaf_decomposition("leaf has no children");
    return n_->left;
}
const Pbt& Pbt::right() const {
    if (!n_) throw leaf_decomposition("leaf has no children");
    return n_->right;
}

const std::string& Pbt::encode() const { return n_ ? n_->enc : kLeafEncoding; }

PbtParts decompose_pbt(const Pbt& t) {
    if (t.is_leaf()) throw leaf_decomposition("cannot decompose the leaf");
    return PbtParts{t.left(), t.dec(), t.ltype(), t.rtype(), t.right()};
}

bool validate_pbt(const Pbt& t, const Alphabet& dec, const Alphabet& omega) {
    if (t.is_leaf()) return true;
    if (!dec.contains(t.dec())) return false;
    if (!t.left().is_leaf() && !omega.contains(t.ltype())) return false;
    if (!t.right().is_leaf() && !omega.contains(t.rtype())) return false;
    return validate_pbt(t.left(), dec, omega) && validate_pbt(t.right(), dec, omega);
}

std::vector<Pbt> enumerate_pbt(int n, const Alphabet& dec, const Alphabet& omega) {
    require_omega(omega);
    if (n < 0) throw config_error("vertex count must be nonnegative");

    // by_size[k] holds all trees with k internal vertices.
    std::vector<std::vector<Pbt>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[0] = {Pbt::leaf()};
    for (int m = 1; m <= n; ++m) {
        std::vector<Pbt> out;
        for (int k = 0; k <= m - 1; ++k) {
            for (const Pbt& l : by_size[static_cast<std::size_t>(k)])
                for (const Pbt& r : by_size[static_cast<std::size_t>(m - 1 - k)])
                    for (const auto& d : dec.symbols()) {
                        const auto& ltypes =
                            l.is_leaf() ? std::vector<std::string>{kEmptyType} : omega.symbols();
                        const auto& rtypes =
                            r.is_leaf() ? std::vector<std::string>{kEmptyType} : omega.symbols();
                        for (const auto& lt : ltypes)
                            for (const auto& rt : rtypes)
                                out.push_back(Pbt::node(d, lt, l, rt, r));
                    }
        }
        by_size[static_cast<std::size_t>(m)] = std::move(out);
    }
    auto& result = by_size[static_cast<std::size_t>(n)];
    std::sort(result.begin(), result.end());
    return result;
}

Integer count_pbt(int n, std::size_t dec_size, std::size_t omega_size) {
    if (n < 0) throw config_error("vertex count must be nonnegative");
    if (n == 0) return 1;
    // Catalan(n) = binom(2n, n) / (n + 1), exact over integers.
    Integer catalan = 1;
    for (int i = 0; i < n; ++i) {
        catalan *= Integer(2 * n - i);
        catalan /= Integer(i + 1);
    }
    catalan /= Integer(n + 1);
    Integer out = catalan;
    for (int i = 0; i < n; ++i) out *= Integer(dec_size);
    for (int i = 0; i < n - 1; ++i) out *= Integer(omega_size);
    return out;
}

namespace {

// Minimal recursive-descent parser shared by the CLI and the bindings.
// Symbols are maximal runs of non-delimiter bytes, matching Alphabet's rules.
struct PbtParser {
    std::string_view text;
    std::size_t pos = 0;

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

    Pbt tree() {
        skip_ws();
        if (peek() == '|') {
            ++pos;
            return Pbt::leaf();
        }
        const std::string head = symbol();
        if (head != "B") throw parse_error("expected 'B' or '|' at offset " + std::to_string(pos));
        expect('(');
        const std::string dec = symbol();
        skip_ws();
        expect(',');
        const std::string lt = symbol();
        skip_ws();
        expect(',');
        const Pbt l = tree();
        skip_ws();
        expect(',');
        const std::string rt = symbol();
        skip_ws();
        expect(',');
        const Pbt r = tree();
        skip_ws();
        expect(')');
        return Pbt::node(dec, lt, l, rt, r);
    }
};

} // namespace

Pbt parse_pbt(std::string_view text) {
    PbtParser p{text};
    const Pbt t = p.tree();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("trailing input after tree at offset " + std::to_string(p.pos));
    return t;
}

} // namespace matchbox
