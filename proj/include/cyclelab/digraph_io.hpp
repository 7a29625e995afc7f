#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cyclelab/digraph.hpp"

namespace cyclelab {

/**
 * Text digraph format:
 *
 *     n m
 *     u v            (m lines, 0-indexed, ascending (u, v) when written)
 *     # label v text (optional trailer, one per labelled vertex)
 *
 * Lines end with LF. Reading accepts any whitespace between fields and
 * rejects loops, parallel arcs and out-of-range ids with a ParseError that
 * names the offending line.
 */
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);

std::string to_text(const Digraph& d);
Digraph from_text(const std::string& text);

Digraph load_digraph(const std::filesystem::path& path);
void save_digraph(const std::filesystem::path& path, const Digraph& d);

/// Graphviz export; labels become node labels when present.
void write_dot(std::ostream& out, const Digraph& d, const std::string& name = "D");

}  // namespace cyclelab
