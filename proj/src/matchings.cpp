// SPDX-License-Identifier: Apache-2.0
#include "graphgate/matchings.hpp"

#include <algorithm>
#include <bit>

#include "graphgate/errors.hpp"

namespace graphgate {

namespace {

// Backtracking over colored edges: always extend the lowest-indexed uncovered
// vertex. Any edge covering it has that vertex as its smaller endpoint (the
// larger one would imply an already-covered partner), so only a-side incidence
// lists are needed. Graphs here stay small (<= 64 vertices).
template <typename F>
void for_each_pm(const Graph& g, F&& emit) {
    const int n = static_cast<int>(g.vertices.size());
    if (n == 0) {
        emit(std::vector<int>{});
        return;
    }
    if (n % 2 != 0 || n > 64) return;

    std::vector<std::vector<int>> by_a(static_cast<size_t>(n));
    for (size_t i = 0; i < g.edges.size(); ++i) {
        by_a[static_cast<size_t>(g.edges[i].a)].push_back(static_cast<int>(i));
    }

    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(n / 2));
    std::uint64_t covered = 0;

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(chosen.size()) * 2 == n) {
            emit(chosen);
            return;
        }
        int v = std::countr_one(covered); // lowest uncovered vertex
        for (int ei : by_a[static_cast<size_t>(v)]) {
            const Edge& e = g.edges[static_cast<size_t>(ei)];
            if (covered & (1ull << e.b)) continue;
            covered |= (1ull << v) | (1ull << e.b);
            chosen.push_back(ei);
            self(self);
            chosen.pop_back();
            covered &= ~((1ull << v) | (1ull << e.b));
        }
    };
    rec(rec);
}

Ket::Assignment assignment_of(const Graph& g, const std::vector<int>& matching) {
    Ket::Assignment modes(g.vertices.size(), 0);
    for (int ei : matching) {
        const Edge& e = g.edges[static_cast<size_t>(ei)];
        modes[static_cast<size_t>(e.a)] = e.mode_a;
        modes[static_cast<size_t>(e.b)] = e.mode_b;
    }
    return modes;
}

} // namespace

std::vector<PerfectMatching> enumerate_pms(const Graph& g) {
    require_valid(g);
    std::vector<PerfectMatching> out;
    for_each_pm(g, [&](const std::vector<int>& matching) {
        PerfectMatching pm{matching};
        std::sort(pm.edges.begin(), pm.edges.end());
        out.push_back(std::move(pm));
    });
    std::sort(out.begin(), out.end(),
              [](const PerfectMatching& x, const PerfectMatching& y) { return x.edges < y.edges; });
    return out;
}

Ket graph_state(const Graph& g) {
    require_valid(g);
    Ket psi(vertex_dims(g));
    for_each_pm(g, [&](const std::vector<int>& matching) {
        Complex prod{1.0, 0.0};
        for (int ei : matching) prod *= g.edges[static_cast<size_t>(ei)].weight;
        psi.add(assignment_of(g, matching), prod);
    });
    psi.prune();
    return psi;
}

Ket oracle_state(const Graph& g) {
    require_valid(g);
    const size_t m = g.edges.size();
    if (m > 24) {
        throw PreconditionError("oracle_state limited to 24 edges, got " + std::to_string(m));
    }
    const int n = static_cast<int>(g.vertices.size());
    Ket psi(vertex_dims(g));

    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) * 2 != n) continue;
        std::uint64_t covered = 0;
        bool ok = true;
        Complex prod{1.0, 0.0};
        Ket::Assignment modes(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < m && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            const Edge& e = g.edges[i];
            std::uint64_t pair = (1ull << e.a) | (1ull << e.b);
            if (covered & pair) {
                ok = false;
                break;
            }
            covered |= pair;
            prod *= e.weight;
            modes[static_cast<size_t>(e.a)] = e.mode_a;
            modes[static_cast<size_t>(e.b)] = e.mode_b;
        }
        if (ok && (n == 0 || std::popcount(covered) == n)) {
            psi.add(modes, prod);
        }
    }
    psi.prune();
    return psi;
}

Ket state_gradient(const Graph& g, int edge_index) {
    require_valid(g);
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges.size())) {
        throw PreconditionError("edge index " + std::to_string(edge_index) + " out of range");
    }
    Ket grad(vertex_dims(g));
    for_each_pm(g, [&](const std::vector<int>& matching) {
        bool contains = false;
        Complex rest{1.0, 0.0};
        for (int ei : matching) {
            if (ei == edge_index) {
                contains = true;
            } else {
                rest *= g.edges[static_cast<size_t>(ei)].weight;
            }
        }
        if (contains) grad.add(assignment_of(g, matching), rest);
    });
    grad.prune();
    return grad;
}

MatchingTable::MatchingTable(const Graph& g) {
    require_valid(g);
    edge_count_ = g.edges.size();
    const size_t n = g.vertices.size();
    k_ = static_cast<int>(n / 2);

    strides_.assign(n, 1);
    for (size_t v = n; v-- > 1;) {
        strides_[v - 1] = strides_[v] * static_cast<size_t>(g.vertices[v].dim);
    }
    dense_size_ = n == 0 ? 1 : strides_[0] * static_cast<size_t>(g.vertices[0].dim);
    if (dense_size_ > (1ull << 26)) {
        throw PreconditionError("dense basis too large: " + std::to_string(dense_size_));
    }

    for_each_pm(g, [&](const std::vector<int>& matching) {
        size_t code = 0;
        for (int ei : matching) {
            const Edge& e = g.edges[static_cast<size_t>(ei)];
            code += strides_[static_cast<size_t>(e.a)] * static_cast<size_t>(e.mode_a);
            code += strides_[static_cast<size_t>(e.b)] * static_cast<size_t>(e.mode_b);
            member_edges_.push_back(static_cast<std::uint32_t>(ei));
        }
        codes_.push_back(static_cast<std::uint32_t>(code));
    });
}

size_t MatchingTable::code(const Ket::Assignment& modes) const {
    size_t c = 0;
    for (size_t v = 0; v < modes.size(); ++v) {
        c += strides_[v] * static_cast<size_t>(modes[v]);
    }
    return c;
}

Ket::Assignment MatchingTable::decode(size_t code) const {
    Ket::Assignment modes(strides_.size(), 0);
    for (size_t v = 0; v < strides_.size(); ++v) {
        modes[v] = static_cast<Mode>(code / strides_[v]);
        code %= strides_[v];
    }
    return modes;
}

void MatchingTable::state(const std::vector<Complex>& w, std::vector<Complex>& psi) const {
    psi.assign(dense_size_, Complex{0.0, 0.0});
    const std::uint32_t* e = member_edges_.data();
    for (size_t m = 0; m < codes_.size(); ++m, e += k_) {
        Complex prod{1.0, 0.0};
        for (int j = 0; j < k_; ++j) prod *= w[e[j]];
        psi[codes_[m]] += prod;
    }
}

void MatchingTable::overlaps(const std::vector<Complex>& w, const std::vector<Complex>& psi,
                             const std::vector<Complex>& target,
                             std::vector<Complex>& target_overlap,
                             std::vector<Complex>& state_overlap) const {
    target_overlap.assign(edge_count_, Complex{0.0, 0.0});
    state_overlap.assign(edge_count_, Complex{0.0, 0.0});
    std::vector<Complex> prefix(static_cast<size_t>(k_) + 1);
    std::vector<Complex> suffix(static_cast<size_t>(k_) + 1);
    const std::uint32_t* e = member_edges_.data();
    for (size_t m = 0; m < codes_.size(); ++m, e += k_) {
        const Complex tc = std::conj(target[codes_[m]]);
        const Complex pc = std::conj(psi[codes_[m]]);
        if (tc == Complex{0.0, 0.0} && pc == Complex{0.0, 0.0}) continue;
        prefix[0] = Complex{1.0, 0.0};
        for (int j = 0; j < k_; ++j) prefix[static_cast<size_t>(j) + 1] = prefix[static_cast<size_t>(j)] * w[e[j]];
        suffix[static_cast<size_t>(k_)] = Complex{1.0, 0.0};
        for (int j = k_; j-- > 0;) suffix[static_cast<size_t>(j)] = suffix[static_cast<size_t>(j) + 1] * w[e[j]];
        for (int j = 0; j < k_; ++j) {
            const Complex rest = prefix[static_cast<size_t>(j)] * suffix[static_cast<size_t>(j) + 1];
            target_overlap[e[j]] += tc * rest;
            state_overlap[e[j]] += pc * rest;
        }
    }
}

} // namespace graphgate
