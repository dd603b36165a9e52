#pragma once

#include <string>
#include <vector>

namespace matchbox {

// "e" is the distinguished empty edge type: it never belongs to Omega and is
// only valid on an edge into a leaf.
inline const std::string kEmptyType = "e";

// Finite ordered alphabet of symbols (decoration set D or edge-type set
// Omega). The given order is meaningful: it defines symbol rank, which the
// rooted-tree canonical form sorts by.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    static Alphabet parse(const std::string& csv); // comma-separated

    const std::vector<std::string>& symbols() const { return syms_; }
    std::size_t size() const { return syms_.size(); }
    bool contains(const std::string& s) const;
    int rank(const std::string& s) const; // -1 when absent

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> syms_;
};

// Omega additionally must not contain the reserved empty type.
void require_omega(const Alphabet& omega);

} // namespace matchbox
