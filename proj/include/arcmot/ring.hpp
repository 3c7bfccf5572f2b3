#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "arcmot/field.hpp"
#include "arcmot/monomial.hpp"

namespace arcmot {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ambient polynomial ring: coefficient field, ordered variable names, monomial order.
// Rings are immutable and shared; equality is structural so independently built
// rings with the same data interoperate.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
  public:
    static RingPtr make(CoefficientField field, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::DegRevLex);

    const CoefficientField& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    MonomialOrder order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }

    // -1 when the name is not a ring variable.
    int var_index(const std::string& name) const;

    bool same(const PolyRing& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
    }

    int compare(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b, order_); }

    Monomial var_monomial(std::size_t i, unsigned e = 1) const {
        Monomial m(vars_.size());
        m.set(i, e);
        return m;
    }

    std::string monomial_string(const Monomial& m) const;

  private:
    PolyRing(CoefficientField field, std::vector<std::string> vars, MonomialOrder order);
    CoefficientField field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::unordered_map<std::string, int> index_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b)) throw precondition_error(std::string("ring mismatch in ") + what);
}

}  // namespace arcmot
