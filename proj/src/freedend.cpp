#include "matchbox/freedend.hpp"

#include "matchbox/errors.hpp"

namespace matchbox {

namespace {

// Grafts each basis tree of `rhs` as the right subtree under (d, t1, l, t2, .).
// Every tree produced by the recursion on the open side has >= 1 vertex, so
// the edge-type/leaf discipline of Pbt::node is preserved automatically.
DendElem graft_right(const Pbt& l, const std::string& d, const std::string& t1,
                     const std::string& t2, const DendElem& rhs) {
    DendElem out;
    for (const auto& [u, c] : rhs.terms())
        out.add_term(Pbt::node(d, t1, l, t2, u), c);
    return out;
}

DendElem graft_left(const DendElem& lhs, const std::string& d, const std::string& t1,
                    const std::string& t2, const Pbt& r) {
    DendElem out;
    for (const auto& [u, c] : lhs.terms())
        out.add_term(Pbt::node(d, t1, u, t2, r), c);
    return out;
}

} // namespace

DendElem dend_prec_basis(const Pbt& s, const Pbt& u, const std::string& t) {
    if (s.is_leaf() && u.is_leaf())
        throw leaf_decomposition("prec on two leaves is outside the recursion");
    if (s.is_leaf()) return DendElem::zero(); // | prec_t U = 0
    if (u.is_leaf()) return DendElem::basis(s); // S prec_t | = S
    // Both sides nonempty: the index cannot have degenerated to "e".
    if (t == kEmptyType)
        throw edge_type_mismatch("prec with empty index on two nonempty trees");
    const PbtParts p = decompose_pbt(s);
    DendElem out = graft_right(p.left, p.dec, p.ltype, p.rtype, dend_prec_basis(p.right, u, t));
    out += graft_right(p.left, p.dec, p.ltype, t, dend_succ_basis(p.right, u, p.rtype));
    return out;
}

DendElem dend_succ_basis(const Pbt& s, const Pbt& u, const std::string& t) {
    if (s.is_leaf() && u.is_leaf())
        throw leaf_decomposition("succ on two leaves is outside the recursion");
    if (u.is_leaf()) return DendElem::zero(); // S succ_t | = 0
    if (s.is_leaf()) return DendElem::basis(u); // | succ_t U = U
    if (t == kEmptyType)
        throw edge_type_mismatch("succ with empty index on two nonempty trees");
    const PbtParts p = decompose_pbt(u);
    DendElem out = graft_left(dend_prec_basis(s, p.left, p.ltype), p.dec, t, p.rtype, p.right);
    out += graft_left(dend_succ_basis(s, p.left, t), p.dec, p.ltype, p.rtype, p.right);
    return out;
}

namespace {

void require_index(const std::string& omega) {
    if (omega == kEmptyType)
        throw edge_type_mismatch("the reserved empty type 'e' is not a product index");
}

} // namespace

DendElem dend_prec(const DendElem& a, const DendElem& b, const std::string& omega) {
    require_index(omega);
    return bilinear(a, b, [&omega](const Pbt& s, const Pbt& u) {
        return dend_prec_basis(s, u, omega);
    });
}

DendElem dend_succ(const DendElem& a, const DendElem& b, const std::string& omega) {
    require_index(omega);
    return bilinear(a, b, [&omega](const Pbt& s, const Pbt& u) {
        return dend_succ_basis(s, u, omega);
    });
}

DendElem dend_bullet(const DendElem& a, const DendElem& b, const std::string& omega) {
    return dend_prec(a, b, omega) + dend_succ(a, b, omega);
}

} // namespace matchbox
