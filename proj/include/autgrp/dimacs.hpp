#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "autgrp/graph.hpp"

namespace autgrp {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// DIMACS-style format: header "p edge <n> <m>", edge lines "e <u> <v>",
// optional color lines "n <v> <c>". 1-based vertex ids. Uncolored vertices
// get the default color; duplicate edges are deduplicated.
ColoredGraph parse_dimacs(std::istream& in);
ColoredGraph parse_dimacs(const std::string& text);
ColoredGraph load_dimacs(const std::string& path);

// Emits the same format, each edge once with u < v.
void write_dimacs(std::ostream& out, const ColoredGraph& g);
std::string to_dimacs(const ColoredGraph& g);

} // namespace autgrp
