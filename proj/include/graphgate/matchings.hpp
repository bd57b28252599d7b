// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "graphgate/graph.hpp"
#include "graphgate/ket.hpp"

namespace graphgate {

struct PerfectMatching {
    std::vector<int> edges; // ascending edge indices into the parent graph

    bool operator==(const PerfectMatching&) const = default;
};

// Every colored perfect matching exactly once, ordered lexicographically by
// sorted edge-index tuple. Empty for odd vertex counts or unmatchable graphs.
std::vector<PerfectMatching> enumerate_pms(const Graph& g);

// Coherent superposition over all perfect matchings: each matching
// contributes the product of its edge weights to the basis term where every
// vertex carries the mode of its matched endpoint. Unnormalized.
Ket graph_state(const Graph& g);

// Independent brute force over all 2^|E| edge subsets; must agree with
// graph_state. Guarded at |E| <= 24.
Ket oracle_state(const Graph& g);

// Holomorphic derivative d|psi>/dw_e: the sub-superposition over matchings
// containing e, with w_e divided out of each contribution (computed as the
// product of the other member weights, so w_e = 0 is exact, not 0/0).
Ket state_gradient(const Graph& g, int edge_index);

// Flattened matching table for repeated evaluation on a fixed topology.
// Basis terms are indexed by a mixed-radix code over vertex modes
// (vertex 0 most significant), so the dense state vector is tiny for the
// graph sizes the search works with.
class MatchingTable {
public:
    explicit MatchingTable(const Graph& g);

    size_t matching_count() const { return codes_.size(); }
    size_t edge_count() const { return edge_count_; }
    size_t dense_size() const { return dense_size_; }
    int edges_per_matching() const { return k_; }

    size_t code(const Ket::Assignment& modes) const;
    Ket::Assignment decode(size_t code) const;

    // psi[code] = sum over matchings of the product of member edge weights
    void state(const std::vector<Complex>& w, std::vector<Complex>& psi) const;

    // per-edge sums over matchings containing e, with the member product
    // divided by w_e (prefix/suffix form):
    //   target_overlap[e] = <target | d psi / d w_e>
    //   state_overlap[e]  = <psi    | d psi / d w_e>
    void overlaps(const std::vector<Complex>& w, const std::vector<Complex>& psi,
                  const std::vector<Complex>& target, std::vector<Complex>& target_overlap,
                  std::vector<Complex>& state_overlap) const;

private:
    size_t edge_count_ = 0;
    size_t dense_size_ = 1;
    int k_ = 0;
    std::vector<size_t> strides_;
    std::vector<std::uint32_t> member_edges_; // k_ entries per matching
    std::vector<std::uint32_t> codes_;        // one term code per matching
};

} // namespace graphgate
