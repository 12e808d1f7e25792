#pragma once

// Certification reports. Every axiom checker returns one verdict per commuting
// diagram, and a FAIL always carries a witness: the basis vector on which the
// two composites disagree, together with both evaluated sides.

#include <optional>
#include <string>
#include <vector>

#include "codual/matrix.hpp"

namespace codual {

template <FieldType F>
struct Witness {
    std::size_t basis_index = 0;
    std::vector<typename F::Elem> lhs;
    std::vector<typename F::Elem> rhs;
};

template <FieldType F>
struct DiagramCheck {
    std::string diagram;
    bool pass = false;
    std::optional<Witness<F>> witness;
};

template <FieldType F>
struct CertReport {
    std::vector<DiagramCheck<F>> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const DiagramCheck<F>* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.diagram == name) return &c;
        return nullptr;
    }

    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.diagram;
        return "";
    }
};

/// Compare two composites column by column; on mismatch, witness the first
/// differing basis vector.
template <FieldType F>
DiagramCheck<F> compare_composites(const std::string& diagram, const Matrix<F>& lhs,
                                   const Matrix<F>& rhs) {
    lhs.require_same_shape(rhs, diagram.c_str());
    const F& k = lhs.field();
    for (std::size_t j = 0; j < lhs.cols(); ++j)
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            if (!k.eq(lhs(i, j), rhs(i, j)))
                return DiagramCheck<F>{diagram, false, Witness<F>{j, lhs.col(j), rhs.col(j)}};
    return DiagramCheck<F>{diagram, true, std::nullopt};
}

}  // namespace codual
