// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace graphgate {

// Invariant violations in graph data (bad modes, duplicate edges, self-loops, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text that is not well-formed JSON.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed JSON that does not match the expected document layout.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fidelity requested against a zero post-selected state.
class ZeroStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation called with incompatible arguments (arity or dimension mismatch).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fixture load failure, verification drift, or regeneration mismatch.
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Search gave up. Carries the best loss seen for diagnostics.
class DiscoveryError : public std::runtime_error {
public:
    DiscoveryError(const std::string& what, double best)
        : std::runtime_error(what), best_loss(best) {}
    double best_loss;
};

} // namespace graphgate
