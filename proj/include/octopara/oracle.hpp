#pragma once

#include "octopara/operator.hpp"

namespace octopara {

// Literal, definition-level evaluations used to cross-check the optimized
// paths. Deliberately slow: no core-map shortcuts, no transposition tricks.
struct DenseOracle {
    int dim = 0;
    Matrix full;  // 8n x 8n

    OVector apply(const OVector& x) const { return OVector::from_flat(matvec(full, x.flat())); }
};

// (f ⊛ g)(x) = sum_i e_i Re(f(g(x conj(e_i)))) evaluated verbatim on every
// coordinate basis vector.
DenseOracle oracle_regular_compose(const ParaLinearOperator& f, const ParaLinearOperator& g);

// Max over sampled (x, y) of |<x, T*y> - <Tx, y> - [y,T,x]|.
double oracle_adjoint_contract(const ParaLinearOperator& t, int trials, uint64_t seed);

// Exhaustively verifies all 64 basis products against the oriented triples,
// the delta rule and the unit rule, rederiving the expected products from an
// independent statement of the rules.
bool oracle_fano_table();

double oracle_max_difference(const DenseOracle& o, const ParaLinearOperator& t);

}  // namespace octopara
