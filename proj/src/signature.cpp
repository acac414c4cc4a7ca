#include "relim/signature.hpp"

#include <algorithm>

#include "relim/errors.hpp"

namespace relim {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (!valid_name(s.name)) throw DomainError("bad relation symbol name: '" + s.name + "'");
        if (s.arity < 1) throw DomainError("arity must be >= 1 for symbol " + s.name);
        // partition and subset enumerations per key grow with Bell(arity)
        // and 2^arity; beyond 8 nothing here is computable anyway
        if (s.arity > 8) throw DomainError("arity above 8 is not supported (symbol " + s.name + ")");
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[j].name == s.name)
                throw DomainError("duplicate relation symbol name: " + s.name);
        max_arity_ = std::max(max_arity_, s.arity);
    }
}

std::optional<int> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

Signature binary_signature() {
    return Signature({{"R", 2}});
}

} // namespace relim
