#ifndef RELIM_SIGNATURE_HPP
#define RELIM_SIGNATURE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relim {

struct Symbol {
    std::string name;
    int arity = 0;
    bool operator==(const Symbol&) const = default;
};

/// A finite relational language: an ordered list of relation symbols with
/// positive arities. Purely relational, no functions or constants.
class Signature {
public:
    explicit Signature(std::vector<Symbol> symbols);

    int count() const { return static_cast<int>(symbols_.size()); }
    const Symbol& symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    const std::string& name(int i) const { return symbols_[static_cast<std::size_t>(i)].name; }
    int arity(int i) const { return symbols_[static_cast<std::size_t>(i)].arity; }
    int max_arity() const { return max_arity_; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<Symbol> symbols_;
    int max_arity_ = 0;
};

/// One binary relation symbol "R": digraphs with loops.
Signature binary_signature();

} // namespace relim

#endif
