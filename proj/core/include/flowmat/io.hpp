#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flowmat/graph.hpp"
#include "flowmat/lattice.hpp"
#include "flowmat/matroid.hpp"

// Plain-text formats. All readers throw ParseError on malformed input.
namespace flowmat::io {

/// Line 1: r. Lines 2..r+1: r integers each. Validation errors from
/// GramMatrix (not symmetric, not positive definite) propagate unchanged.
GramMatrix read_gram(std::istream& in);
void write_gram(std::ostream& out, const MatZ& gram);

/// Line 1: `n m`. Then m lines `tail head`, 0-based.
graph::Multigraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const graph::Multigraph& g);

/// `matroid <ground> <circuits>`, `blocks <b>: n_1 ... n_b`, then one
/// `circuit: <columns>` line per circuit, blocks expanded to contiguous
/// columns and circuits sorted lexicographically.
std::string format_matroid(const BlockMatroid& m);

/// Whitespace-separated 0/1 rows, one per line; blank lines ignored.
std::vector<std::vector<bool>> read_incidence(std::istream& in);

/// True if the text is a well-formed Gram file shape (a lone r, then r rows
/// of r integers). Used to tell Gram files from incidence matrices.
bool looks_like_gram(const std::string& text);

}  // namespace flowmat::io
