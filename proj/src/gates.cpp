// SPDX-License-Identifier: Apache-2.0
#include "graphgate/gates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "graphgate/errors.hpp"

namespace graphgate {

int GateSpec::basis_size() const {
    int d = 1;
    for (int di : input_dims) d *= di;
    return d;
}

bool GateSpec::is_bijection() const {
    const int D = basis_size();
    if (static_cast<int>(truth.size()) != D) return false;
    std::set<std::vector<int>> images;
    for (const auto& y : truth) {
        if (static_cast<int>(y.size()) != photon_count()) return false;
        for (size_t i = 0; i < y.size(); ++i) {
            if (y[i] < 0 || y[i] >= output_dims[i]) return false;
        }
        images.insert(y);
    }
    return static_cast<int>(images.size()) == D;
}

int tuple_code(const std::vector<int>& dims, const std::vector<int>& tuple) {
    int code = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        code = code * dims[i] + tuple[i];
    }
    return code;
}

std::vector<int> tuple_decode(const std::vector<int>& dims, int code) {
    std::vector<int> tuple(dims.size(), 0);
    for (size_t i = dims.size(); i-- > 0;) {
        tuple[i] = code % dims[i];
        code /= dims[i];
    }
    return tuple;
}

namespace {

GateSpec make_spec(std::string name, std::vector<int> dims,
                   const std::function<std::vector<int>(const std::vector<int>&)>& fn) {
    GateSpec spec;
    spec.name = std::move(name);
    spec.input_dims = dims;
    spec.output_dims = dims;
    const int D = spec.basis_size();
    spec.truth.reserve(static_cast<size_t>(D));
    for (int code = 0; code < D; ++code) {
        spec.truth.push_back(fn(tuple_decode(dims, code)));
    }
    return spec;
}

} // namespace

GateSpec swap_spec(int d) {
    return make_spec("swap:" + std::to_string(d), {d, d},
                     [](const std::vector<int>& x) { return std::vector<int>{x[1], x[0]}; });
}

GateSpec cx_spec(int d_control, int d_target) {
    return make_spec("cx:" + std::to_string(d_control) + "," + std::to_string(d_target),
                     {d_control, d_target}, [d_target](const std::vector<int>& x) {
                         return std::vector<int>{x[0], (x[1] + x[0]) % d_target};
                     });
}

GateSpec ccx_spec(int d_target) {
    return make_spec("ccx:" + std::to_string(d_target), {2, 2, d_target},
                     [d_target](const std::vector<int>& x) {
                         int shift = (x[0] == 1 && x[1] == 1) ? 1 : 0;
                         return std::vector<int>{x[0], x[1], (x[2] + shift) % d_target};
                     });
}

GateSpec cswap_spec() {
    return make_spec("cswap", {2, 2, 2}, [](const std::vector<int>& x) {
        return x[0] == 1 ? std::vector<int>{x[0], x[2], x[1]}
                         : std::vector<int>{x[0], x[1], x[2]};
    });
}

GateSpec teleport_spec(int d) {
    return make_spec("teleport:" + std::to_string(d), {d},
                     [](const std::vector<int>& x) { return x; });
}

GateSpec parse_gate_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<int> dims;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        size_t start = 0;
        while (true) {
            size_t comma = rest.find(',', start);
            std::string tok = rest.substr(start, comma == std::string::npos ? comma : comma - start);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                            [](char c) { return c >= '0' && c <= '9'; })) {
                throw ParseError("bad dimension token \"" + tok + "\" in \"" + text + "\"");
            }
            int d = std::stoi(tok);
            if (d < 2 || d > 9) {
                throw ParseError("dimension " + tok + " out of range [2, 9] in \"" + text + "\"");
            }
            dims.push_back(d);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    auto expect = [&](size_t n) {
        if (dims.size() != n) {
            throw ParseError("gate \"" + name + "\" takes " + std::to_string(n) +
                             " dimension(s), got " + std::to_string(dims.size()) + " in \"" +
                             text + "\"");
        }
    };
    if (name == "swap") {
        expect(1);
        return swap_spec(dims[0]);
    }
    if (name == "cx") {
        expect(2);
        return cx_spec(dims[0], dims[1]);
    }
    if (name == "ccx") {
        expect(1);
        return ccx_spec(dims[0]);
    }
    if (name == "cswap") {
        expect(0);
        return cswap_spec();
    }
    if (name == "teleport") {
        expect(1);
        return teleport_spec(dims[0]);
    }
    throw ParseError("unknown gate \"" + name + "\"");
}

std::vector<int> apply_gate(const GateSpec& spec, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != spec.photon_count()) {
        throw PreconditionError("tuple length " + std::to_string(x.size()) + " != photon count " +
                                std::to_string(spec.photon_count()));
    }
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= spec.input_dims[i]) {
            throw PreconditionError("tuple entry " + std::to_string(x[i]) + " at slot " +
                                    std::to_string(i) + " outside [0, " +
                                    std::to_string(spec.input_dims[i]) + ")");
        }
    }
    return spec.truth[static_cast<size_t>(tuple_code(spec.input_dims, x))];
}

GateSpec compose_specs(const GateSpec& first, const GateSpec& second) {
    if (first.output_dims != second.input_dims) {
        throw PreconditionError("compose: output dims of \"" + first.name +
                                "\" do not match input dims of \"" + second.name + "\"");
    }
    GateSpec out;
    out.name = first.name + ">" + second.name;
    out.input_dims = first.input_dims;
    out.output_dims = second.output_dims;
    out.truth.reserve(first.truth.size());
    for (const auto& mid : first.truth) {
        out.truth.push_back(second.truth[static_cast<size_t>(tuple_code(second.input_dims, mid))]);
    }
    out.ancilla_modes = first.ancilla_modes;
    out.ancilla_modes.insert(out.ancilla_modes.end(), second.ancilla_modes.begin(),
                             second.ancilla_modes.end());
    return out;
}

GateSpec tensor_specs(const GateSpec& lhs, const GateSpec& rhs) {
    GateSpec out;
    out.name = lhs.name + "*" + rhs.name;
    out.input_dims = lhs.input_dims;
    out.input_dims.insert(out.input_dims.end(), rhs.input_dims.begin(), rhs.input_dims.end());
    out.output_dims = out.input_dims;
    const int D = out.basis_size();
    out.truth.reserve(static_cast<size_t>(D));
    for (int code = 0; code < D; ++code) {
        std::vector<int> x = tuple_decode(out.input_dims, code);
        std::vector<int> xl(x.begin(), x.begin() + lhs.photon_count());
        std::vector<int> xr(x.begin() + lhs.photon_count(), x.end());
        std::vector<int> yl = lhs.truth[static_cast<size_t>(tuple_code(lhs.input_dims, xl))];
        std::vector<int> yr = rhs.truth[static_cast<size_t>(tuple_code(rhs.input_dims, xr))];
        yl.insert(yl.end(), yr.begin(), yr.end());
        out.truth.push_back(std::move(yl));
    }
    out.ancilla_modes = lhs.ancilla_modes;
    out.ancilla_modes.insert(out.ancilla_modes.end(), rhs.ancilla_modes.begin(),
                             rhs.ancilla_modes.end());
    return out;
}

VertexLayout standard_layout(const GateSpec& spec) {
    VertexLayout layout;
    const int k = spec.photon_count();
    for (int i = 0; i < k; ++i) layout.input_ids.push_back(i);
    for (int i = 0; i < k; ++i) layout.output_ids.push_back(k + i);
    for (size_t i = 0; i < spec.ancilla_modes.size(); ++i) {
        layout.ancilla_ids.push_back(2 * k + static_cast<int>(i));
    }
    return layout;
}

VertexLayout layout_for_graph(const GateSpec& spec, const Graph& g) {
    VertexLayout layout{input_ids(g), output_ids(g), ancilla_ids(g)};
    const int k = spec.photon_count();
    if (static_cast<int>(layout.input_ids.size()) != k ||
        static_cast<int>(layout.output_ids.size()) != k) {
        throw PreconditionError("graph has " + std::to_string(layout.input_ids.size()) + "/" +
                                std::to_string(layout.output_ids.size()) +
                                " input/output vertices, gate \"" + spec.name + "\" needs " +
                                std::to_string(k));
    }
    for (int i = 0; i < k; ++i) {
        if (g.dim(layout.input_ids[static_cast<size_t>(i)]) != spec.input_dims[static_cast<size_t>(i)] ||
            g.dim(layout.output_ids[static_cast<size_t>(i)]) != spec.output_dims[static_cast<size_t>(i)]) {
            throw PreconditionError("vertex dims at slot " + std::to_string(i) +
                                    " do not match gate \"" + spec.name + "\"");
        }
    }
    return layout;
}

namespace {

TargetState build_target_impl(const GateSpec& spec, const VertexLayout& layout,
                              const std::vector<int>& dims, const std::vector<Mode>& anc_modes) {
    const size_t total = layout.input_ids.size() + layout.output_ids.size() +
                         layout.ancilla_ids.size();
    if (dims.size() != total) {
        throw PreconditionError("layout covers " + std::to_string(total) + " vertices, dims give " +
                                std::to_string(dims.size()));
    }
    const int D = spec.basis_size();
    const double amp = 1.0 / std::sqrt(static_cast<double>(D));
    Ket ket(dims);
    for (int code = 0; code < D; ++code) {
        std::vector<int> x = tuple_decode(spec.input_dims, code);
        std::vector<int> y = spec.truth[static_cast<size_t>(code)];
        Ket::Assignment modes(dims.size(), 0);
        for (size_t i = 0; i < layout.input_ids.size(); ++i) {
            modes[static_cast<size_t>(layout.input_ids[i])] = x[i];
        }
        for (size_t i = 0; i < layout.output_ids.size(); ++i) {
            if (y[i] < 0 || y[i] >= dims[static_cast<size_t>(layout.output_ids[i])]) {
                throw PreconditionError("truth output outside vertex dimension");
            }
            modes[static_cast<size_t>(layout.output_ids[i])] = y[i];
        }
        for (size_t i = 0; i < layout.ancilla_ids.size(); ++i) {
            modes[static_cast<size_t>(layout.ancilla_ids[i])] = anc_modes[i];
        }
        ket.set(modes, Complex{amp, 0.0});
    }
    return TargetState{std::move(ket), layout};
}

} // namespace

TargetState build_target(const GateSpec& spec) {
    VertexLayout layout = standard_layout(spec);
    std::vector<int> dims = spec.input_dims;
    dims.insert(dims.end(), spec.output_dims.begin(), spec.output_dims.end());
    for (Mode m : spec.ancilla_modes) dims.push_back(std::max(2, m + 1));
    return build_target_impl(spec, layout, dims, spec.ancilla_modes);
}

TargetState build_target(const GateSpec& spec, const Graph& g) {
    VertexLayout layout = layout_for_graph(spec, g);
    std::vector<Mode> anc_modes;
    for (int id : layout.ancilla_ids) {
        anc_modes.push_back(g.vertices[static_cast<size_t>(id)].role.fixed_mode);
    }
    if (!spec.ancilla_modes.empty() && spec.ancilla_modes != anc_modes) {
        throw PreconditionError("gate \"" + spec.name +
                                "\" heralding pattern disagrees with graph ancilla modes");
    }
    return build_target_impl(spec, layout, vertex_dims(g), anc_modes);
}

} // namespace graphgate
