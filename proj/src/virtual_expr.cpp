#include "bkk/virtual_expr.hpp"

#include <algorithm>

#include "bkk/errors.hpp"
#include "bkk/polytope.hpp"

namespace bkk {

VirtualExpr VirtualExpr::symbol(const std::string& name) {
    VirtualExpr e;
    e.terms_[{name}] = 1;
    return e;
}

VirtualExpr VirtualExpr::constant(const Rat& c) {
    VirtualExpr e;
    if (c != 0) e.terms_[{}] = c;
    return e;
}

void VirtualExpr::absorb_binding(const VirtualExpr& other) {
    for (const auto& [name, value] : other.binding_) binding_.emplace(name, value);
}

VirtualExpr VirtualExpr::operator+(const VirtualExpr& other) const {
    VirtualExpr r = *this;
    r.absorb_binding(other);
    for (const auto& [mono, c] : other.terms_) {
        Rat& slot = r.terms_[mono];
        slot += c;
        if (slot == 0) r.terms_.erase(mono);
    }
    return r;
}

VirtualExpr VirtualExpr::operator-() const {
    VirtualExpr r = *this;
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
}

VirtualExpr VirtualExpr::operator-(const VirtualExpr& other) const { return *this + (-other); }

VirtualExpr VirtualExpr::operator*(const VirtualExpr& other) const {
    VirtualExpr r;
    r.binding_ = binding_;
    r.absorb_binding(other);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            Rat& slot = r.terms_[m];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(m);
        }
    return r;
}

VirtualExpr VirtualExpr::scaled(const Rat& c) const {
    if (c == 0) {
        VirtualExpr r;
        r.binding_ = binding_;
        return r;
    }
    VirtualExpr r = *this;
    for (auto& [mono, coef] : r.terms_) coef *= c;
    return r;
}

void VirtualExpr::bind(const std::string& name, SupportSet value) {
    binding_[name] = std::move(value);
}

Rat VirtualExpr::evaluate(std::size_t degree) const {
    Rat total = 0;
    for (const auto& [mono, c] : terms_) {
        if (mono.size() != degree) continue;
        std::vector<SupportSet> args;
        for (const auto& name : mono) {
            auto it = binding_.find(name);
            if (it == binding_.end()) throw UnboundSymbol(name);
            args.push_back(it->second);
        }
        total += c * Rat(mixed_volume(args));
    }
    return total;
}

VirtualExpr geometric_factor(const VirtualExpr& x, std::size_t n) {
    VirtualExpr sum;
    VirtualExpr power = x;
    for (std::size_t k = 1; k <= n; ++k) {
        sum = (k % 2 == 1) ? sum + power : sum - power;
        if (k < n) power = power * x;
    }
    return sum;
}

}  // namespace bkk
