#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sparsehom/decomp.hpp"

namespace sparsehom {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decomposition text format.
//
// Elimination tree:
//   elimtree n=<n> root=<r>
//   <child> <parent>          (exactly n-1 lines)
//
// Tree decomposition:
//   treedecomp n=<bag count>
//   bag <id>: v1 v2 ...       (one per bag)
//   link <id1> <id2>          (bag-tree edges)
//   match <bagid>: u1-v1 ...  (optional matching certificates)
//
// Parsers reject unknown directives.

void write_elim_tree(std::ostream &out, const EliminationTree &t);
void write_tree_decomposition(std::ostream &out, const TreeDecomposition &d);
void write_matched_tree_decomposition(std::ostream &out, const MatchedTreeDecomposition &d);

/// Parses either block from `lines` starting at index `pos`; advances `pos`
/// past the block.
EliminationTree parse_elim_tree(const std::vector<std::string> &lines, std::size_t &pos);
MatchedTreeDecomposition parse_tree_decomposition(const std::vector<std::string> &lines,
                                                  std::size_t &pos);

std::vector<std::string> read_lines(std::istream &in);

}  // namespace sparsehom
