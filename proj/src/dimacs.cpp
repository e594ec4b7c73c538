#include "autgrp/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace autgrp {

ColoredGraph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m_declared = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors;
    for (; std::getline(in, line); ) {
        ++lineno;
        std::istringstream iss(line);
        std::string kind;
        if (!(iss >> kind)) continue;  // blank line
        if (kind == "c") continue;
        if (kind == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            std::string fmt;
            if (!(iss >> fmt >> n >> m_declared) || fmt != "edge" || n < 0)
                throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
            colors.assign(n, 1);  // default color for unannotated vertices
            continue;
        }
        if (n < 0) throw ParseError(lineno, "missing 'p edge' header");
        if (kind == "e") {
            int u, v;
            if (!(iss >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(u - 1, v - 1);
        } else if (kind == "n") {
            int v, c;
            if (!(iss >> v >> c)) throw ParseError(lineno, "malformed color line");
            if (v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
            colors[v - 1] = c;
        } else {
            throw ParseError(lineno, "unknown line type '" + kind + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'p edge' header");
    return ColoredGraph(n, edges, std::move(colors));
}

ColoredGraph parse_dimacs(const std::string& text) {
    std::istringstream iss(text);
    return parse_dimacs(iss);
}

ColoredGraph load_dimacs(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(f);
}

void write_dimacs(std::ostream& out, const ColoredGraph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    bool colored = false;
    for (int c : g.colors())
        if (c != g.colors()[0]) { colored = true; break; }
    if (colored)
        for (int v = 0; v < g.n(); ++v)
            out << "n " << v + 1 << ' ' << g.colors()[v] + 1 << '\n';
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) out << "e " << v + 1 << ' ' << u + 1 << '\n';
}

std::string to_dimacs(const ColoredGraph& g) {
    std::ostringstream os;
    write_dimacs(os, g);
    return os.str();
}

} // namespace autgrp
