#ifndef RELIM_REMOVAL_HPP
#define RELIM_REMOVAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relim/rational.hpp"
#include "relim/structure.hpp"

namespace relim {

/// Normalized symmetric-difference distance between the coded families of
/// two structures on the same universe: sum over keys of
/// |edge set difference| / size^(partition class count). A metric: zero iff
/// the structures are literally equal.
Rational distance_d(const Structure& m, const Structure& n);

/// Finite list of pairwise non-isomorphic forbidden patterns over one
/// signature. An optional member-size cap can be stored for testing runs;
/// operations only ever inspect members up to their cap argument.
struct ForbiddenFamily {
    Signature sig;
    std::vector<Structure> members; // may be empty: nothing is forbidden
    std::optional<int> cap;

    static ForbiddenFamily of(Signature sig, std::vector<Structure> members,
                              std::optional<int> cap = std::nullopt);
};

/// True iff no member with ‖M‖ <= cap has an induced copy in N (see
/// count_induced_copies in kernels.hpp for the underlying count).
bool is_family_free(const Structure& n, const ForbiddenFamily& f, int cap);

struct RemovalReport {
    double epsilon = 0.0;                    // distance budget, when run under one
    Rational distance;                       // d(N, N')
    std::uint64_t iterations = 0;            // toggles performed
    bool success = false;                    // family-free within the budget
    std::map<std::pair<int, int>, std::uint64_t> edits; // (symbol, partition rank) -> |edge set difference|
};

/// Deterministic repair search: each iteration finds the first violating
/// induced copy (members in order, subsets in colexicographic order) and
/// toggles one relation tuple inside it, choosing the least present coded
/// edge when one exists (deletion preferred) and the least absent one
/// otherwise. Toggles
/// can oscillate, so iterations are capped; running out of budget is a
/// report state, not an error.
std::pair<Structure, RemovalReport> greedy_removal(const Structure& n, const ForbiddenFamily& f,
                                                   int cap, std::uint64_t budget);

struct ExperimentRow {
    std::uint64_t trial = 0;
    int size = 0;
    Rational max_density;  // max over inspected members of p(M, N)
    bool repaired = false; // family-free and within the distance budget
    Rational distance;
    std::uint64_t iterations = 0;
};

/// Run greedy_removal over generated trial structures and tabulate the
/// density-vs-repair frontier. Trials run concurrently; the generator is
/// called once per trial with the trial index.
std::vector<ExperimentRow> removal_experiment(const ForbiddenFamily& f, double epsilon,
                                              const std::function<Structure(std::uint64_t)>& generator,
                                              std::uint64_t trials, int cap, std::uint64_t budget);

/// CSV rows: trial,size,max_density_num,max_density_den,repaired,d_num,d_den,iterations
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

/// Flip k distinct uniformly chosen relation tuples (any symbol, any tuple
/// over the universe). Deterministic in the seed.
Structure toggle_random_tuples(const Structure& n, int k, std::uint64_t seed);

} // namespace relim

#endif
