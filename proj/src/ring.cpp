#include "arcmot/ring.hpp"

#include <set>

namespace arcmot {

PolyRing::PolyRing(CoefficientField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!seen.insert(vars_[i]).second)
            throw precondition_error("duplicate ring variable '" + vars_[i] + "'");
        index_[vars_[i]] = static_cast<int>(i);
    }
}

RingPtr PolyRing::make(CoefficientField field, std::vector<std::string> vars, MonomialOrder order) {
    return RingPtr(new PolyRing(field, std::move(vars), order));
}

int PolyRing::var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::string PolyRing::monomial_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars_[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace arcmot
