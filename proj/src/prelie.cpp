#include "matchbox/prelie.hpp"

#include "matchbox/errors.hpp"

namespace matchbox {

PreLieElem prelie_star_basis(const RootedTree& t, const RootedTree& u,
                             const std::string& etype, const Alphabet& omega) {
    if (!omega.contains(etype))
        throw alphabet_mismatch("grafting type '" + etype + "' not in the type alphabet");
    PreLieElem out;
    for (int v = 0; v < u.vertices(); ++v)
        out.add_term(graft_rooted_at(u, v, t, etype, omega), Rational(1));
    return out;
}

PreLieElem prelie_star(const PreLieElem& a, const PreLieElem& b,
                       const std::string& etype, const Alphabet& omega) {
    return bilinear(a, b, [&](const RootedTree& t, const RootedTree& u) {
        return prelie_star_basis(t, u, etype, omega);
    });
}

} // namespace matchbox
