// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphgate/graph.hpp"

namespace graphgate {

// Sparse post-selected state: per-vertex mode assignment -> complex amplitude.
// Map ordering makes iteration (and printing) deterministic.
class Ket {
public:
    using Assignment = std::vector<Mode>;
    using TermMap = std::map<Assignment, Complex>;

    // terms below this magnitude are dropped by prune(); keeps the sparse map
    // clean after destructive interference, well under every test tolerance
    static constexpr double term_tolerance = 1e-14;

    Ket() = default;
    explicit Ket(std::vector<int> dims) : dims_(std::move(dims)) {}

    const std::vector<int>& dims() const { return dims_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Assignment& modes, Complex amp);
    void set(const Assignment& modes, Complex amp);
    Complex amplitude(const Assignment& modes) const; // 0 for absent terms

    void prune(double tol = term_tolerance);

    double norm2() const;                  // <psi|psi>
    Complex overlap(const Ket& other) const; // <this|other>, conjugates this
    void scale(Complex factor);
    void add_scaled(const Ket& other, Complex factor); // this += factor*other
    Ket normalized() const;                // throws ZeroStateError on zero ket

    std::string to_string() const;

    bool operator==(const Ket&) const = default;

private:
    std::vector<int> dims_;
    TermMap terms_;
};

// max absolute amplitude difference over the union of term supports
double max_amplitude_difference(const Ket& a, const Ket& b);

} // namespace graphgate
