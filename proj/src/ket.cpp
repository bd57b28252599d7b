// SPDX-License-Identifier: Apache-2.0
#include "graphgate/ket.hpp"

#include <cmath>
#include <sstream>

#include "graphgate/errors.hpp"

namespace graphgate {

void Ket::add(const Assignment& modes, Complex amp) {
    if (modes.size() != dims_.size()) {
        throw PreconditionError("assignment length " + std::to_string(modes.size()) +
                                " != vertex count " + std::to_string(dims_.size()));
    }
    terms_[modes] += amp;
}

void Ket::set(const Assignment& modes, Complex amp) {
    if (modes.size() != dims_.size()) {
        throw PreconditionError("assignment length " + std::to_string(modes.size()) +
                                " != vertex count " + std::to_string(dims_.size()));
    }
    terms_[modes] = amp;
}

Complex Ket::amplitude(const Assignment& modes) const {
    auto it = terms_.find(modes);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void Ket::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < tol) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

double Ket::norm2() const {
    double s = 0.0;
    for (const auto& [modes, amp] : terms_) s += std::norm(amp);
    return s;
}

Complex Ket::overlap(const Ket& other) const {
    // iterate the smaller support
    const Ket& small = size() <= other.size() ? *this : other;
    const Ket& big = size() <= other.size() ? other : *this;
    Complex s{0.0, 0.0};
    for (const auto& [modes, amp] : small.terms_) {
        auto it = big.terms_.find(modes);
        if (it == big.terms_.end()) continue;
        const Complex mine = (&small == this) ? amp : it->second;
        const Complex theirs = (&small == this) ? it->second : amp;
        s += std::conj(mine) * theirs;
    }
    return s;
}

void Ket::scale(Complex factor) {
    for (auto& [modes, amp] : terms_) amp *= factor;
}

void Ket::add_scaled(const Ket& other, Complex factor) {
    for (const auto& [modes, amp] : other.terms_) add(modes, factor * amp);
}

Ket Ket::normalized() const {
    double n2 = norm2();
    if (n2 <= 0.0) throw ZeroStateError("cannot normalize a zero state");
    Ket out = *this;
    out.scale(Complex{1.0 / std::sqrt(n2), 0.0});
    return out;
}

std::string Ket::to_string() const {
    std::ostringstream os;
    for (const auto& [modes, amp] : terms_) {
        os << "(";
        for (size_t i = 0; i < modes.size(); ++i) {
            if (i) os << ",";
            os << modes[i];
        }
        os << "): " << amp.real() << (amp.imag() < 0 ? "" : "+") << amp.imag() << "i\n";
    }
    return os.str();
}

double max_amplitude_difference(const Ket& a, const Ket& b) {
    double worst = 0.0;
    for (const auto& [modes, amp] : a.terms()) {
        worst = std::max(worst, std::abs(amp - b.amplitude(modes)));
    }
    for (const auto& [modes, amp] : b.terms()) {
        worst = std::max(worst, std::abs(amp - a.amplitude(modes)));
    }
    return worst;
}

} // namespace graphgate
