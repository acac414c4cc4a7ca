#include "relim/io.hpp"

#include <fstream>
#include <sstream>

#include "relim/errors.hpp"

namespace relim {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        std::string tok;
        while (in >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormatError("expected an integer, got '" + tok + "'", line);
    }
}

Signature parse_lang_line(const Line& line) {
    std::vector<Symbol> symbols;
    for (std::size_t q = 1; q < line.tokens.size(); ++q) {
        const std::string& tok = line.tokens[q];
        const auto slash = tok.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 >= tok.size())
            throw FormatError("expected <name>/<arity>, got '" + tok + "'", line.number);
        Symbol s;
        s.name = tok.substr(0, slash);
        s.arity = parse_int(tok.substr(slash + 1), line.number);
        symbols.push_back(std::move(s));
    }
    try {
        return Signature(std::move(symbols));
    } catch (const DomainError& e) {
        throw FormatError(e.what(), line.number);
    }
}

std::string serialize_lang(const Signature& sig) {
    std::string out = "lang";
    for (const auto& s : sig.symbols()) out += " " + s.name + "/" + std::to_string(s.arity);
    return out + "\n";
}

// header: "lang ..." then "<size_word> <n>"; returns remaining lines
std::pair<Signature, int> parse_header(const std::vector<Line>& lines, const char* size_word,
                                       std::size_t& next) {
    if (lines.empty()) throw FormatError("empty document", 1);
    if (lines[0].tokens[0] != "lang")
        throw FormatError("document must start with a 'lang' line", lines[0].number);
    Signature sig = parse_lang_line(lines[0]);
    if (lines.size() < 2 || lines[1].tokens[0] != size_word)
        throw FormatError(std::string("expected a '") + size_word + "' line",
                          lines.size() < 2 ? lines[0].number + 1 : lines[1].number);
    if (lines[1].tokens.size() != 2)
        throw FormatError(std::string("'") + size_word + "' takes one integer", lines[1].number);
    const int value = parse_int(lines[1].tokens[1], lines[1].number);
    next = 2;
    return {std::move(sig), value};
}

} // namespace

Structure parse_structure(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t next = 0;
    auto [sig, size] = parse_header(lines, "size", next);
    if (size < 0) throw FormatError("size must be >= 0", lines[1].number);
    std::vector<TupleSet> rels(static_cast<std::size_t>(sig.count()));
    for (std::size_t li = next; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const auto idx = sig.index_of(line.tokens[0]);
        if (!idx) throw FormatError("unknown relation symbol '" + line.tokens[0] + "'", line.number);
        const int r = sig.arity(*idx);
        if (static_cast<int>(line.tokens.size()) - 1 != r)
            throw FormatError("symbol " + line.tokens[0] + " takes " + std::to_string(r) +
                                  " entries",
                              line.number);
        Tuple t;
        for (int q = 1; q <= r; ++q) {
            const int a = parse_int(line.tokens[static_cast<std::size_t>(q)], line.number);
            if (a < 1 || a > size)
                throw FormatError("entry " + std::to_string(a) + " outside [1," +
                                      std::to_string(size) + "]",
                                  line.number);
            t.push_back(a);
        }
        rels[static_cast<std::size_t>(*idx)].push_back(std::move(t));
    }
    return Structure(std::move(sig), size, std::move(rels));
}

std::string serialize_structure(const Structure& s) {
    std::string out = serialize_lang(s.sig());
    out += "size " + std::to_string(s.size()) + "\n";
    for (int i = 0; i < s.sig().count(); ++i)
        for (const auto& t : s.relation(i)) {
            out += s.sig().name(i);
            for (int a : t) out += " " + std::to_string(a);
            out += "\n";
        }
    return out;
}

namespace {

// "cell R 1|2 ..." / "edge R 1,2 ...": resolve the symbol and partition
std::pair<int, SetPartition> parse_key(const Signature& sig, const Line& line) {
    const auto idx = sig.index_of(line.tokens[1]);
    if (!idx) throw FormatError("unknown relation symbol '" + line.tokens[1] + "'", line.number);
    SetPartition p = [&] {
        try {
            return parse_partition(line.tokens[2]);
        } catch (const DomainError& e) {
            throw FormatError(e.what(), line.number);
        }
    }();
    if (p.ground() != sig.arity(*idx))
        throw FormatError("partition of [" + std::to_string(p.ground()) + "] does not fit arity " +
                              std::to_string(sig.arity(*idx)),
                          line.number);
    return {*idx, std::move(p)};
}

} // namespace

DHypFamily parse_dhyp(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t next = 0;
    auto [sig, size] = parse_header(lines, "size", next);
    if (size < 0) throw FormatError("size must be >= 0", lines[1].number);
    DHypFamily out(sig, size);
    std::vector<std::vector<TupleSet>> edges(static_cast<std::size_t>(sig.count()));
    for (int i = 0; i < sig.count(); ++i)
        edges[static_cast<std::size_t>(i)].resize(partition_count(sig.arity(i)));
    for (std::size_t li = next; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] != "edge")
            throw FormatError("expected an 'edge' line, got '" + line.tokens[0] + "'", line.number);
        if (line.tokens.size() < 3) throw FormatError("edge line too short", line.number);
        auto [symbol, p] = parse_key(sig, line);
        const int t = p.class_count();
        if (static_cast<int>(line.tokens.size()) - 3 != t)
            throw FormatError("edge takes " + std::to_string(t) + " entries", line.number);
        Tuple e;
        for (int q = 0; q < t; ++q)
            e.push_back(parse_int(line.tokens[static_cast<std::size_t>(q) + 3], line.number));
        for (int a : e)
            if (a < 1 || a > size)
                throw FormatError("entry " + std::to_string(a) + " outside [1," +
                                      std::to_string(size) + "]",
                                  line.number);
        for (std::size_t x = 0; x < e.size(); ++x)
            for (std::size_t y = x + 1; y < e.size(); ++y)
                if (e[x] == e[y]) throw FormatError("edge has repeated entries", line.number);
        edges[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(partition_rank(p))]
            .push_back(std::move(e));
    }
    return DHypFamily(std::move(sig), size, std::move(edges));
}

std::string serialize_dhyp(const DHypFamily& d) {
    std::string out = serialize_lang(d.sig());
    out += "size " + std::to_string(d.size()) + "\n";
    for (int i = 0; i < d.sig().count(); ++i) {
        const auto parts = partitions_of(d.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr)
            for (const auto& e : d.edges(i, static_cast<int>(pr))) {
                out += "edge " + d.sig().name(i) + " " + parts[pr].to_string();
                for (int a : e) out += " " + std::to_string(a);
                out += "\n";
            }
    }
    return out;
}

StepLimit parse_limit(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t next = 0;
    auto [sig, resolution] = parse_header(lines, "resolution", next);
    if (resolution < 1) throw FormatError("resolution must be >= 1", lines[1].number);
    StepLimit out(std::move(sig), resolution);
    for (std::size_t li = next; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] != "cell")
            throw FormatError("expected a 'cell' line, got '" + line.tokens[0] + "'", line.number);
        if (line.tokens.size() < 3) throw FormatError("cell line too short", line.number);
        auto [symbol, p] = parse_key(out.sig(), line);
        const std::size_t comps = (1ULL << p.class_count()) - 1;
        if (line.tokens.size() - 3 != comps)
            throw FormatError("cell takes " + std::to_string(comps) + " colors", line.number);
        // expand '*' wildcards
        std::vector<std::vector<std::uint8_t>> partial{{}};
        for (std::size_t q = 0; q < comps; ++q) {
            const std::string& tok = line.tokens[q + 3];
            std::vector<int> options;
            if (tok == "*") {
                for (int c = 1; c <= resolution; ++c) options.push_back(c);
            } else {
                const int c = parse_int(tok, line.number);
                if (c < 1 || c > resolution)
                    throw FormatError("color " + std::to_string(c) + " outside [1," +
                                          std::to_string(resolution) + "]",
                                      line.number);
                options.push_back(c);
            }
            std::vector<std::vector<std::uint8_t>> grown;
            grown.reserve(partial.size() * options.size());
            for (const auto& prefix : partial)
                for (int c : options) {
                    auto copy = prefix;
                    copy.push_back(static_cast<std::uint8_t>(c));
                    grown.push_back(std::move(copy));
                }
            partial = std::move(grown);
        }
        const int rank = partition_rank(p);
        for (auto& colors : partial) out.select(symbol, rank, std::move(colors));
    }
    return out;
}

std::string serialize_limit(const StepLimit& f) {
    std::string out = serialize_lang(f.sig());
    out += "resolution " + std::to_string(f.resolution()) + "\n";
    for (int i = 0; i < f.sig().count(); ++i) {
        const auto parts = partitions_of(f.sig().arity(i));
        for (std::size_t pr = 0; pr < parts.size(); ++pr)
            for (const auto& colors : f.cells(i, static_cast<int>(pr))) {
                out += "cell " + f.sig().name(i) + " " + parts[pr].to_string();
                for (auto c : colors) out += " " + std::to_string(static_cast<int>(c));
                out += "\n";
            }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write file: " + path);
    out << content;
}

} // namespace relim

