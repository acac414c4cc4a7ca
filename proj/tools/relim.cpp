// relim: exact densities, hypergraph coding, step-limit sampling and the
// removal harness for finite relational structures.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "relim/catalog.hpp"
#include "relim/density.hpp"
#include "relim/errors.hpp"
#include "relim/hyperpartition.hpp"
#include "relim/io.hpp"
#include "relim/limit.hpp"
#include "relim/removal.hpp"
#include "relim/rng.hpp"

namespace {

using namespace relim;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

// compact comma-free form of a structure's relations, CSV-safe:
// "R:1.2;2.3|S:3"
std::string inline_relations(const Structure& s) {
    std::string out;
    for (int i = 0; i < s.sig().count(); ++i) {
        if (i > 0) out += '|';
        out += s.sig().name(i) + ":";
        bool first_tuple = true;
        for (const auto& t : s.relation(i)) {
            if (!first_tuple) out += ';';
            first_tuple = false;
            for (std::size_t q = 0; q < t.size(); ++q) {
                if (q > 0) out += '.';
                out += std::to_string(t[q]);
            }
        }
    }
    return out;
}

Structure complete_bipartite(int size) {
    const int cut = size / 2;
    TupleSet arcs;
    for (int a = 1; a <= cut; ++a)
        for (int b = cut + 1; b <= size; ++b) {
            arcs.push_back({a, b});
            arcs.push_back({b, a});
        }
    return Structure(binary_signature(), size, {arcs});
}

ForbiddenFamily load_family(const std::vector<std::string>& paths) {
    if (paths.empty()) throw DomainError("at least one forbidden pattern file is required");
    std::vector<Structure> members;
    for (const auto& path : paths) members.push_back(parse_structure(read_file(path)));
    Signature sig = members.front().sig();
    return ForbiddenFamily::of(std::move(sig), std::move(members));
}

int run(int argc, char** argv) {
    CLI::App app{"finite relational structures and their step-limit objects"};
    app.require_subcommand(1);

    std::string m_path, n_path, d_path, limit_path, out_path, base_path;
    std::string kind = "p";
    std::uint64_t seed = 0, trials = 100, budget = 1000;
    int m_size = 0, cap = 3, pattern_size = 2, ground = 8, levels = 2, resolution = 2;
    double epsilon = 0.05;
    std::vector<std::string> family_paths;
    std::vector<int> sizes{4, 9, 16};
    std::vector<int> toggles{1};

    auto* density_cmd = app.add_subcommand("density", "exact density of M in N");
    density_cmd->add_option("--kind", kind, "p|t|t0|tind")->default_val("p");
    density_cmd->add_option("-M", m_path, "pattern structure file")->required();
    density_cmd->add_option("-N", n_path, "host structure file")->required();

    auto* encode_cmd = app.add_subcommand("encode", "code a structure into hypergraph families");
    encode_cmd->add_option("-N", n_path, "structure file")->required();
    encode_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* decode_cmd = app.add_subcommand("decode", "decode a hypergraph family file");
    decode_cmd->add_option("-D", d_path, "coded family file")->required();
    decode_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* sample_cmd = app.add_subcommand("sample", "sample a structure from a step limit");
    sample_cmd->add_option("--limit", limit_path, "step limit file")->required();
    sample_cmd->add_option("--m", m_size, "universe size")->required();
    sample_cmd->add_option("--seed", seed, "random seed");
    sample_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* dist_cmd = app.add_subcommand("dist", "coded edit distance between structures");
    dist_cmd->add_option("-M", m_path, "first structure file")->required();
    dist_cmd->add_option("-N", n_path, "second structure file")->required();

    auto* ld_cmd = app.add_subcommand("limit-density", "exact induced density of M in a step limit");
    ld_cmd->add_option("-M", m_path, "pattern structure file")->required();
    ld_cmd->add_option("--limit", limit_path, "step limit file")->required();

    auto* conv_cmd = app.add_subcommand("converge", "sampled type frequencies vs exact limit densities");
    conv_cmd->add_option("--limit", limit_path, "step limit file")->required();
    conv_cmd->add_option("--pattern-size", pattern_size, "isomorphism type size")->required();
    conv_cmd->add_option("--sizes", sizes, "sample sizes")->delimiter(',');
    conv_cmd->add_option("--trials", trials, "samples per size");
    conv_cmd->add_option("--seed", seed, "random seed");
    conv_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    auto* hp_cmd = app.add_subcommand("hpcheck", "equitability gap of a seeded hyperpartition");
    hp_cmd->add_option("--n", ground, "ground set size")->required();
    hp_cmd->add_option("--levels", levels, "levels (subset sizes)");
    hp_cmd->add_option("--l", resolution, "colors")->required();
    hp_cmd->add_option("--seed", seed, "random seed");

    auto* remove_cmd = app.add_subcommand("remove", "repair a structure to forbidden-family freeness");
    remove_cmd->add_option("-N", n_path, "structure file")->required();
    remove_cmd->add_option("-F", family_paths, "forbidden pattern file (repeatable)")->required();
    remove_cmd->add_option("--cap", cap, "largest member size inspected");
    remove_cmd->add_option("--budget", budget, "iteration budget");
    remove_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* exp_cmd = app.add_subcommand("removal-exp", "planted-perturbation removal experiment");
    exp_cmd->add_option("-F", family_paths, "forbidden pattern file (repeatable)")->required();
    exp_cmd->add_option("--eps", epsilon, "distance budget")->required();
    exp_cmd->add_option("--size", m_size, "trial structure size")->required();
    exp_cmd->add_option("--toggles", toggles, "planted toggle counts")->delimiter(',');
    exp_cmd->add_option("--trials", trials, "trials per toggle count");
    exp_cmd->add_option("--seed", seed, "random seed");
    exp_cmd->add_option("--cap", cap, "largest member size inspected");
    exp_cmd->add_option("--budget", budget, "iteration budget");
    exp_cmd->add_option("--base", base_path, "base structure file (default: complete bipartite)");
    exp_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // help exits clean, usage errors are domain errors
    }

    if (density_cmd->parsed()) {
        const Structure m = parse_structure(read_file(m_path));
        const Structure n = parse_structure(read_file(n_path));
        Density d(0);
        if (kind == "p")
            d = density_p(m, n);
        else if (kind == "t")
            d = density_t(m, n);
        else if (kind == "t0")
            d = density_t0(m, n);
        else if (kind == "tind")
            d = density_tind(m, n);
        else
            throw DomainError("unknown density kind: " + kind);
        std::cout << fraction_string(d) << "\n";
    } else if (encode_cmd->parsed()) {
        emit(out_path, serialize_dhyp(encode(parse_structure(read_file(n_path)))));
    } else if (decode_cmd->parsed()) {
        emit(out_path, serialize_structure(decode(parse_dhyp(read_file(d_path)))));
    } else if (sample_cmd->parsed()) {
        const StepLimit f = parse_limit(read_file(limit_path));
        emit(out_path, serialize_structure(sample_structure(f, m_size, seed)));
    } else if (dist_cmd->parsed()) {
        const Structure m = parse_structure(read_file(m_path));
        const Structure n = parse_structure(read_file(n_path));
        std::cout << fraction_string(distance_d(m, n)) << "\n";
    } else if (ld_cmd->parsed()) {
        const Structure m = parse_structure(read_file(m_path));
        const StepLimit f = parse_limit(read_file(limit_path));
        std::cout << fraction_string(induced_density(m, f)) << "\n";
    } else if (conv_cmd->parsed()) {
        const StepLimit f = parse_limit(read_file(limit_path));
        std::ostringstream csv;
        csv << "m,type,type_key,exact_num,exact_den,empirical,trials,abs_dev\n";
        for (std::size_t si = 0; si < sizes.size(); ++si) {
            const auto table = convergence_table(f, pattern_size, sizes[si], trials,
                                                 derive(seed, static_cast<std::uint64_t>(si)));
            for (std::size_t ti = 0; ti < table.types.size(); ++ti) {
                const Rational dev = abs(table.empirical[ti] - table.exact[ti]);
                csv << table.sample_size << ',' << ti << ',' << inline_relations(table.types[ti])
                    << ',' << table.exact[ti].get_num() << ',' << table.exact[ti].get_den() << ','
                    << table.empirical[ti].get_d() << ',' << table.trials << ',' << dev.get_d()
                    << '\n';
            }
        }
        emit(out_path, csv.str());
    } else if (hp_cmd->parsed()) {
        const Hyperpartition h = hyperpartition_from_seed(sample_seed(ground, levels, seed), resolution);
        const Rational delta = equitability_delta(h);
        std::cout << fraction_string(delta) << " " << delta.get_d() << "\n";
    } else if (remove_cmd->parsed()) {
        const Structure n = parse_structure(read_file(n_path));
        const auto family = load_family(family_paths);
        const auto [repaired, report] = greedy_removal(n, family, cap, budget);
        std::ostringstream out;
        out << "# success " << (report.success ? 1 : 0) << "\n";
        out << "# iterations " << report.iterations << "\n";
        out << "# d " << fraction_string(report.distance) << "\n";
        out << serialize_structure(repaired);
        emit(out_path, out.str());
        if (!report.success) return 1;
    } else if (exp_cmd->parsed()) {
        const auto family = load_family(family_paths);
        const Structure base =
            base_path.empty() ? complete_bipartite(m_size) : parse_structure(read_file(base_path));
        if (base.size() != m_size)
            throw DomainError("base structure size does not match --size");
        std::vector<ExperimentRow> all_rows;
        for (std::size_t ki = 0; ki < toggles.size(); ++ki) {
            const int k = toggles[ki];
            const std::uint64_t stream = derive(seed, static_cast<std::uint64_t>(ki));
            const auto rows = removal_experiment(
                family, epsilon,
                [&](std::uint64_t trial) {
                    return toggle_random_tuples(base, k, derive(stream, trial));
                },
                trials, cap, budget);
            all_rows.insert(all_rows.end(), rows.begin(), rows.end());
        }
        for (std::size_t i = 0; i < all_rows.size(); ++i)
            all_rows[i].trial = static_cast<std::uint64_t>(i);
        emit(out_path, experiment_csv(all_rows));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const relim::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const relim::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
