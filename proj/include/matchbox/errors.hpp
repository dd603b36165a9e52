#pragma once

#include <stdexcept>
#include <string>

namespace matchbox {

// All recoverable failures carry a stable code usable in CLI/report output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error edge_type_mismatch(const std::string& what) { return Error("EdgeTypeMismatch", what); }
inline Error leaf_decomposition(const std::string& what) { return Error("LeafDecomposition", what); }
inline Error invalid_vertex(const std::string& what) { return Error("InvalidVertex", what); }
inline Error alphabet_mismatch(const std::string& what) { return Error("AlphabetMismatch", what); }
inline Error dimension_mismatch(const std::string& what) { return Error("DimensionMismatch", what); }
inline Error budget_exceeded(const std::string& what) { return Error("BudgetExceeded", what); }
inline Error precondition_failed(const std::string& what) { return Error("PreconditionFailed", what); }
inline Error nonzero_weight(const std::string& what) { return Error("NonzeroWeight", what); }
inline Error missing_operation(const std::string& what) { return Error("MissingOperation", what); }
inline Error cap_exceeded(const std::string& what) { return Error("CapExceeded", what); }
inline Error parse_error(const std::string& what) { return Error("ParseError", what); }
inline Error config_error(const std::string& what) { return Error("ConfigError", what); }

} // namespace matchbox
