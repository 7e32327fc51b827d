#include "reconf/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace reconf {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

Graph parse_dimacs(std::istream& in, std::ostream* diagnostics) {
    std::string line;
    int lineno = 0;
    bool got_header = false;
    long long n = 0, declared_m = 0;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    long long dropped = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (got_header)
                throw ParseError(lineno, "duplicate header");
            std::string fmt;
            std::string extra;
            if (!(iss >> fmt >> n >> declared_m) || fmt != "edge" || n < 0 || declared_m < 0 ||
                (iss >> extra))
                throw ParseError(lineno, "malformed header (expected 'p edge <n> <m>')");
            if (n > 1'000'000'000)
                throw ParseError(lineno, "vertex count out of range");
            got_header = true;
            continue;
        }
        if (tag == "e") {
            if (!got_header)
                throw ParseError(lineno, "edge before header");
            long long u = 0, v = 0;
            std::string extra;
            if (!(iss >> u >> v) || (iss >> extra))
                throw ParseError(lineno, "malformed edge (expected 'e <u> <v>')");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range");
            if (u == v)
                throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            const long long a = std::min(u, v) - 1, b = std::max(u, v) - 1;
            if (!seen.insert(a * n + b).second) {
                ++dropped;
                if (diagnostics)
                    *diagnostics << "warning: duplicate edge " << u << " " << v << " at line "
                                 << lineno << ", ignored\n";
                continue;
            }
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            continue;
        }
        throw ParseError(lineno, "unrecognised line type '" + tag + "'");
    }
    if (!got_header)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p edge' header");
    if (diagnostics && static_cast<long long>(edges.size()) + dropped != declared_m)
        *diagnostics << "warning: header declares " << declared_m << " edges, file has "
                     << edges.size() + dropped << "\n";
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
}

Coloring parse_coloring(std::istream& in, int n, int k) {
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(n));
    long long value = 0;
    while (in >> value) {
        if (static_cast<int>(colors.size()) == n)
            throw ParseError("colouring has more than " + std::to_string(n) + " entries");
        if (value < 1 || value > k)
            throw ParseError("colour of vertex " + std::to_string(colors.size() + 1) +
                             " outside 1.." + std::to_string(k));
        colors.push_back(static_cast<int>(value));
    }
    if (!in.eof()) {
        in.clear();
        std::string tok;
        in >> tok;
        throw ParseError("invalid colouring token '" + tok + "'");
    }
    if (static_cast<int>(colors.size()) != n)
        throw ParseError("colouring has " + std::to_string(colors.size()) + " entries, expected " +
                         std::to_string(n));
    return Coloring(std::move(colors), k);
}

void write_coloring(const Coloring& c, std::ostream& out) {
    for (int i = 0; i < c.size(); ++i)
        out << c.colors[i] << (i + 1 == c.size() ? "\n" : " ");
    if (c.size() == 0)
        out << "\n";
}

} // namespace reconf
