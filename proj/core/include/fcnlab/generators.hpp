#ifndef FCNLAB_GENERATORS_HPP
#define FCNLAB_GENERATORS_HPP

#include "fcnlab/graph.hpp"

#include <string>
#include <variant>

namespace fcnlab {

/// Cycle C_n, n >= 3. Labels are zero-padded indices in cycle order.
Graph cycle(std::size_t n);
/// Path P_n, n >= 1.
Graph path(std::size_t n);
/// Complete graph K_n, n >= 1.
Graph complete(std::size_t n);
/// Hypercube Q^dim on dim-bit strings; Q^0 is K1 with the empty label.
Graph hypercube(std::size_t dim);

/// The binary string 10(01)^(level-1) that marks the root of each copy of
/// FCN(level-1) inside FCN(level). Requires level >= 1.
std::string fcn_root_suffix(std::size_t level);

/// Fractal cubic network FCN(level) on the 4^(level+1) binary strings of
/// length 2*level + 2.
///
/// FCN(0) is the 4-cycle 00-01-11-10-00. FCN(l) is four copies of FCN(l-1)
/// prefixed with 11, 01, 10 and 00, plus the four edges of the cycle
/// 00r-10r-11r-01r-00r where r = fcn_root_suffix(l).
Graph fcn(std::size_t level);

/// Root of Omega, by label or by index.
using RootSpec = std::variant<std::string, Vertex>;

Vertex resolve_root(const Graph& omega, const RootSpec& root);

/// Rooted product Gamma o_v Omega: one copy of Omega per vertex of Gamma with
/// the copy's root identified with that vertex; Gamma's edges join the roots.
/// Vertices are labelled "<gamma-label>:<omega-label>".
Graph rooted_product(const Graph& gamma, const Graph& omega, const RootSpec& root);

/// Relabels "ab:x" to "abx" (drops the first ':'). Turns the rooted-product
/// presentation C4 o_v FCN(l-1) into FCN(l)'s string labels.
Graph concatenate_product_labels(const Graph& g);

}  // namespace fcnlab

#endif  // FCNLAB_GENERATORS_HPP
