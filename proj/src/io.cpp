#include "planar7/io.hpp"

#include <sstream>

#include "planar7/embedding.hpp"

namespace planar7 {

namespace {

// Strips comments/blank lines, yielding (line number, content).
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) out.emplace_back(no, line);
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError(0, "empty edge-list input");
    std::istringstream head(lines[0].second);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError(lines[0].first, "expected header \"n m\"");
    std::string extra;
    if (head >> extra) throw ParseError(lines[0].first, "trailing tokens after header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines[0].first, "expected " + std::to_string(m) + " edge lines, found " +
                                             std::to_string(lines.size() - 1));
    Graph g(static_cast<int>(n));
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i].second);
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(lines[i].first, "expected \"u v\"");
        if (ls >> extra) throw ParseError(lines[i].first, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= v || v >= n)
            throw ParseError(lines[i].first, "edge must satisfy 0 <= u < v < n");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::exception& e) {
            throw ParseError(lines[i].first, e.what());
        }
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Embedding parse_rotation_system(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError(0, "empty rotation-system input");
    std::istringstream head(lines[0].second);
    long long n = -1;
    std::string extra;
    if (!(head >> n) || n < 0 || (head >> extra)) throw ParseError(lines[0].first, "expected header \"n\"");
    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i].second);
        std::string vtok;
        if (!(ls >> vtok) || vtok.back() != ':')
            throw ParseError(lines[i].first, "expected \"v: w1 w2 ...\"");
        long long v;
        try {
            v = std::stoll(vtok.substr(0, vtok.size() - 1));
        } catch (...) {
            throw ParseError(lines[i].first, "bad vertex id");
        }
        if (v < 0 || v >= n) throw ParseError(lines[i].first, "vertex id out of range");
        if (seen[v]) throw ParseError(lines[i].first, "duplicate rotation line for vertex " + std::to_string(v));
        seen[v] = 1;
        long long w;
        while (ls >> w) {
            if (w < 0 || w >= n) throw ParseError(lines[i].first, "neighbor id out of range");
            rot[v].push_back(static_cast<int>(w));
        }
        if (!ls.eof()) throw ParseError(lines[i].first, "bad neighbor token");
    }
    Graph g(static_cast<int>(n));
    for (int v = 0; v < n; ++v)
        for (int w : rot[v])
            if (v < w) {
                try {
                    g.add_edge(v, w);
                } catch (const std::exception& e) {
                    throw ParseError(0, e.what());
                }
            }
    try {
        return Embedding::from_rotations(g, std::move(rot));
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
}

std::string write_rotation_system(const Embedding& emb) {
    std::ostringstream os;
    os << emb.graph().order() << "\n";
    for (int v = 0; v < emb.graph().order(); ++v) {
        os << v << ":";
        for (int w : emb.rotations()[v]) os << " " << w;
        os << "\n";
    }
    return os.str();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace planar7
