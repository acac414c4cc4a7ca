#include "relim/removal.hpp"

#include <algorithm>
#include <sstream>

#include "relim/coding.hpp"
#include "relim/errors.hpp"
#include "relim/kernels.hpp"
#include "relim/rng.hpp"

namespace relim {

Rational distance_d(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() != n.size()) throw DomainError("distance requires a shared universe");
    const DHypFamily cm = encode(m);
    const DHypFamily cn = encode(n);
    Rational d(0);
    for (int i = 0; i < m.sig().count(); ++i) {
        const auto parts = partitions_of(m.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const auto& a = cm.edges(i, static_cast<int>(pr));
            const auto& b = cn.edges(i, static_cast<int>(pr));
            TupleSet diff;
            std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                          std::back_inserter(diff));
            if (diff.empty()) continue;
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m.size()),
                          static_cast<unsigned long>(parts[pr].class_count()));
            d += ratio(mpz_class(static_cast<unsigned long>(diff.size())), den);
        }
    }
    return d;
}

ForbiddenFamily ForbiddenFamily::of(Signature sig, std::vector<Structure> members,
                                    std::optional<int> cap) {
    for (std::size_t a = 0; a < members.size(); ++a) {
        if (members[a].sig() != sig) throw DomainError("family members have different signatures");
        // the empty structure is induced in everything; forbidding it is unrepairable
        if (members[a].size() == 0) throw DomainError("family members must have at least one element");
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (is_isomorphic(members[a], members[b]))
                throw DomainError("family members must be pairwise non-isomorphic");
    }
    return ForbiddenFamily{std::move(sig), std::move(members), cap};
}

bool is_family_free(const Structure& n, const ForbiddenFamily& f, int cap) {
    for (const auto& m : f.members) {
        if (n.sig() != m.sig()) throw DomainError("family signature does not match the structure");
        if (m.size() > cap) continue;
        if (count_induced_copies(m, n) > 0) return false;
    }
    return true;
}

namespace {

// First member/subset pair with an induced copy: members in family order,
// k-subsets of [n] in colexicographic order.
std::optional<std::pair<std::size_t, std::vector<int>>> first_copy(const Structure& n,
                                                                   const ForbiddenFamily& f,
                                                                   int cap) {
    for (std::size_t mi = 0; mi < f.members.size(); ++mi) {
        const auto& m = f.members[mi];
        if (m.size() > cap || m.size() > n.size() || m.size() == 0) continue;
        const int k = m.size();
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) subset[static_cast<std::size_t>(j)] = j + 1;
        // colex successor: bump the first element that can move without
        // passing the next one, reset the prefix
        while (true) {
            if (is_isomorphic(m, induced_substructure(n, subset))) return {{mi, subset}};
            int j = 0;
            while (j < k) {
                const int limit = (j + 1 < k) ? subset[static_cast<std::size_t>(j) + 1] - 1 : n.size();
                if (subset[static_cast<std::size_t>(j)] < limit) break;
                ++j;
            }
            if (j == k) break;
            ++subset[static_cast<std::size_t>(j)];
            for (int q = 0; q < j; ++q) subset[static_cast<std::size_t>(q)] = q + 1;
        }
    }
    return std::nullopt;
}

// The least coded toggle inside the copy: keys in canonical order, edges in
// lexicographic order; present edges (deletions) before absent ones.
struct Toggle {
    int symbol = 0;
    int partition_rank = 0;
    Tuple raw; // full relation tuple to flip
};

std::optional<Toggle> pick_toggle(const Structure& n, const std::vector<int>& subset) {
    std::optional<Toggle> insertion;
    for (int i = 0; i < n.sig().count(); ++i) {
        const auto parts = partitions_of(n.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const int t = parts[pr].class_count();
            if (t > static_cast<int>(subset.size())) continue;
            // distinct t-tuples over the subset, entries in lex order
            std::vector<int> pos(static_cast<std::size_t>(t), 0);
            while (true) {
                bool distinct = true;
                for (std::size_t x = 0; x < pos.size() && distinct; ++x)
                    for (std::size_t y = x + 1; y < pos.size(); ++y)
                        if (pos[x] == pos[y]) { distinct = false; break; }
                if (distinct) {
                    Tuple b(static_cast<std::size_t>(t));
                    for (int q = 0; q < t; ++q)
                        b[static_cast<std::size_t>(q)] =
                            subset[static_cast<std::size_t>(pos[static_cast<std::size_t>(q)])];
                    const Tuple raw = expand(parts[pr], b);
                    if (n.has_tuple(i, raw))
                        return Toggle{i, static_cast<int>(pr), raw}; // first deletion wins
                    if (!insertion) insertion = Toggle{i, static_cast<int>(pr), raw};
                }
                int q = t - 1;
                while (q >= 0 && pos[static_cast<std::size_t>(q)] == static_cast<int>(subset.size()) - 1) {
                    pos[static_cast<std::size_t>(q)] = 0;
                    --q;
                }
                if (q < 0) break;
                ++pos[static_cast<std::size_t>(q)];
            }
        }
    }
    return insertion;
}

Structure apply_toggle(const Structure& n, const Toggle& tog) {
    auto rels = n.relations();
    auto& rel = rels[static_cast<std::size_t>(tog.symbol)];
    auto it = std::lower_bound(rel.begin(), rel.end(), tog.raw);
    if (it != rel.end() && *it == tog.raw)
        rel.erase(it);
    else
        rel.insert(it, tog.raw);
    return Structure(n.sig(), n.size(), std::move(rels));
}

} // namespace

std::pair<Structure, RemovalReport> greedy_removal(const Structure& n, const ForbiddenFamily& f,
                                                   int cap, std::uint64_t budget) {
    if (budget < 1) throw DomainError("removal budget must be >= 1");
    Structure current = n;
    RemovalReport report;
    while (report.iterations < budget) {
        const auto copy = first_copy(current, f, cap);
        if (!copy) {
            report.success = true;
            break;
        }
        const auto toggle = pick_toggle(current, copy->second);
        if (!toggle) break; // size-1 patterns over an empty key set cannot occur
        current = apply_toggle(current, *toggle);
        ++report.iterations;
    }
    if (!report.success) report.success = !first_copy(current, f, cap).has_value();
    report.distance = distance_d(n, current);

    const DHypFamily before = encode(n);
    const DHypFamily after = encode(current);
    for (int i = 0; i < n.sig().count(); ++i) {
        const auto parts = partitions_of(n.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr) {
            const auto& a = before.edges(i, static_cast<int>(pr));
            const auto& b = after.edges(i, static_cast<int>(pr));
            TupleSet diff;
            std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                          std::back_inserter(diff));
            if (!diff.empty())
                report.edits[{i, static_cast<int>(pr)}] = diff.size();
        }
    }
    return {std::move(current), std::move(report)};
}

namespace {

constexpr std::uint64_t kExactCountCutoff = 2'000'000;
constexpr std::uint64_t kDensitySampleTrials = 20'000;

Rational max_member_density(const Structure& n, const ForbiddenFamily& f, int cap,
                            std::uint64_t seed) {
    Rational best(0);
    for (const auto& m : f.members) {
        if (m.size() > cap || m.size() > n.size()) continue;
        const mpz_class subsets =
            binomial(static_cast<unsigned>(n.size()), static_cast<unsigned>(m.size()));
        Rational p;
        if (subsets <= kExactCountCutoff) {
            p = ratio(mpz_class(static_cast<unsigned long>(count_induced_copies(m, n))), subsets);
        } else {
            // sampled estimate as an exact hit fraction
            std::uint64_t hits = 0;
            for (std::uint64_t trial = 0; trial < kDensitySampleTrials; ++trial) {
                std::vector<int> subset;
                std::uint64_t s = derive(seed, trial);
                while (static_cast<int>(subset.size()) < m.size()) {
                    s = mix64(s);
                    const int v = static_cast<int>(bounded(s, static_cast<std::uint64_t>(n.size()))) + 1;
                    if (std::find(subset.begin(), subset.end(), v) == subset.end())
                        subset.push_back(v);
                }
                if (is_isomorphic(m, induced_substructure(n, subset))) ++hits;
            }
            p = ratio(hits, kDensitySampleTrials);
        }
        best = std::max(best, p);
    }
    return best;
}

} // namespace

std::vector<ExperimentRow> removal_experiment(const ForbiddenFamily& f, double epsilon,
                                              const std::function<Structure(std::uint64_t)>& generator,
                                              std::uint64_t trials, int cap, std::uint64_t budget) {
    if (epsilon <= 0.0) throw DomainError("distance budget must be positive");
    std::vector<ExperimentRow> rows(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t trial = 0; trial < static_cast<std::int64_t>(trials); ++trial) {
        const Structure n = generator(static_cast<std::uint64_t>(trial));
        ExperimentRow row;
        row.trial = static_cast<std::uint64_t>(trial);
        row.size = n.size();
        row.max_density = max_member_density(n, f, cap, derive(0x9d5c, static_cast<std::uint64_t>(trial)));
        auto [fixed, report] = greedy_removal(n, f, cap, budget);
        (void)fixed;
        report.epsilon = epsilon;
        row.distance = report.distance;
        row.iterations = report.iterations;
        row.repaired = report.success && row.distance < Rational(epsilon);
        rows[static_cast<std::size_t>(trial)] = std::move(row);
    }
    return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << "trial,size,max_density_num,max_density_den,repaired,d_num,d_den,iterations\n";
    for (const auto& row : rows)
        out << row.trial << ',' << row.size << ',' << row.max_density.get_num() << ','
            << row.max_density.get_den() << ',' << (row.repaired ? 1 : 0) << ','
            << row.distance.get_num() << ',' << row.distance.get_den() << ',' << row.iterations
            << '\n';
    return out.str();
}

Structure toggle_random_tuples(const Structure& n, int k, std::uint64_t seed) {
    if (k < 0) throw DomainError("toggle count must be >= 0");
    // flat positions across symbols: symbol i contributes size^arity(i) slots
    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n.sig().count()) + 1, 0);
    for (int i = 0; i < n.sig().count(); ++i) {
        std::uint64_t cells = 1;
        for (int q = 0; q < n.sig().arity(i); ++q) cells *= static_cast<std::uint64_t>(n.size());
        offsets[static_cast<std::size_t>(i) + 1] = offsets[static_cast<std::size_t>(i)] + cells;
    }
    const std::uint64_t slots = offsets.back();
    if (static_cast<std::uint64_t>(k) > slots)
        throw DomainError("more toggles requested than distinct tuples exist");

    std::vector<std::uint64_t> chosen;
    std::uint64_t counter = 0;
    while (static_cast<int>(chosen.size()) < k) {
        const std::uint64_t pick = bounded(derive(seed, counter++), slots);
        if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) chosen.push_back(pick);
    }

    auto rels = n.relations();
    for (std::uint64_t pick : chosen) {
        int symbol = 0;
        while (pick >= offsets[static_cast<std::size_t>(symbol) + 1]) ++symbol;
        std::uint64_t rest = pick - offsets[static_cast<std::size_t>(symbol)];
        const int r = n.sig().arity(symbol);
        Tuple t(static_cast<std::size_t>(r));
        for (int q = r - 1; q >= 0; --q) {
            t[static_cast<std::size_t>(q)] = static_cast<int>(rest % static_cast<std::uint64_t>(n.size())) + 1;
            rest /= static_cast<std::uint64_t>(n.size());
        }
        auto& rel = rels[static_cast<std::size_t>(symbol)];
        auto it = std::lower_bound(rel.begin(), rel.end(), t);
        if (it != rel.end() && *it == t)
            rel.erase(it);
        else
            rel.insert(it, t);
    }
    return Structure(n.sig(), n.size(), std::move(rels));
}

} // namespace relim
