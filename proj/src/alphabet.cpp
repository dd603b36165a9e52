#include "matchbox/alphabet.hpp"

#include <algorithm>

#include "matchbox/errors.hpp"

namespace matchbox {

namespace {

// Symbols appear verbatim inside the tree grammar, so they must avoid its
// delimiters and whitespace. Any other byte (including UTF-8 sequences) is
// treated as opaque.
bool symbol_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        switch (c) {
        case '(': case ')': case ',': case ';': case ':':
        case '[': case ']': case '|': case ' ': case '\t': case '\n': case '\r':
            return false;
        default:
            break;
        }
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : syms_(std::move(symbols)) {
    if (syms_.empty()) throw alphabet_mismatch("alphabet must be nonempty");
    for (const auto& s : syms_) {
        if (!symbol_ok(s))
            throw alphabet_mismatch("invalid symbol '" + s + "' (empty or contains a grammar delimiter)");
        if (std::count(syms_.begin(), syms_.end(), s) != 1)
            throw alphabet_mismatch("duplicate symbol '" + s + "'");
    }
}

Alphabet Alphabet::parse(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(csv.substr(start, comma - start));
        start = comma + 1;
    }
    return Alphabet(std::move(out));
}

bool Alphabet::contains(const std::string& s) const {
    return std::find(syms_.begin(), syms_.end(), s) != syms_.end();
}

int Alphabet::rank(const std::string& s) const {
    const auto it = std::find(syms_.begin(), syms_.end(), s);
    return it == syms_.end() ? -1 : static_cast<int>(it - syms_.begin());
}

void require_omega(const Alphabet& omega) {
    if (omega.contains(kEmptyType))
        throw alphabet_mismatch("edge-type alphabet must not contain the reserved empty type 'e'");
}

} // namespace matchbox
