#include "octopara/oracle.hpp"

#include <cmath>

namespace octopara {

DenseOracle oracle_regular_compose(const ParaLinearOperator& f, const ParaLinearOperator& g) {
    require_same_dim(f, g);
    const int n = f.dim();
    DenseOracle o;
    o.dim = n;
    o.full = Matrix(8 * n, 8 * n);
    for (int kp = 0; kp < n; ++kp) {
        for (int j = 0; j < 8; ++j) {
            const OVector x = OVector::basis(n, kp, j);
            OVector acc(n);
            for (int i = 0; i < 8; ++i) {
                const Octonion ei = Octonion::unit(i);
                const OVector xi = scale(x, ei.conj(), Side::right);
                const OVector inner = re_project(f.apply(g.apply(xi)));
                acc += scale(inner, ei, Side::left);
            }
            const auto flat = acc.flat();
            for (size_t r = 0; r < flat.size(); ++r) o.full(int(r), 8 * kp + j) = flat[r];
        }
    }
    return o;
}

double oracle_adjoint_contract(const ParaLinearOperator& t, int trials, uint64_t seed) {
    const ParaLinearOperator ts = adjoint(t);
    double worst = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::for_trial(seed, 0xad01, uint64_t(trial));
        const OVector x = random_ovector(t.dim(), rng);
        const OVector y = random_ovector(t.dim(), rng);
        const Octonion lhs = inner_product(x, ts.apply(y));
        const Octonion rhs = inner_product(t.apply(x), y) + triple_associator(y, t, x);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

bool oracle_fano_table() {
    // Independent statement of the product rules: unit rule, delta rule, and
    // the oriented triples with cyclic symmetry and anticommutativity.
    static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                      {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    auto expected = [&](int i, int j, int& idx, int& sgn) {
        if (i == 0 || j == 0) {
            idx = i + j;  // one of them is zero
            sgn = 1;
            return true;
        }
        if (i == j) {
            idx = 0;
            sgn = -1;
            return true;
        }
        for (const auto& tr : triples) {
            const int a = tr[0], b = tr[1], c = tr[2];
            const int cyc[3][2] = {{a, b}, {b, c}, {c, a}};
            const int res[3] = {c, a, b};
            for (int r = 0; r < 3; ++r) {
                if (i == cyc[r][0] && j == cyc[r][1]) {
                    idx = res[r];
                    sgn = 1;
                    return true;
                }
                if (i == cyc[r][1] && j == cyc[r][0]) {
                    idx = res[r];
                    sgn = -1;
                    return true;
                }
            }
        }
        return false;  // pair not covered: table incomplete
    };

    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            int idx = -1, sgn = 0;
            if (!expected(i, j, idx, sgn)) return false;
            const Octonion prod = Octonion::unit(i) * Octonion::unit(j);
            for (int m = 0; m < 8; ++m) {
                const double want = (m == idx) ? double(sgn) : 0.0;
                if (prod[m] != want) return false;
            }
        }
    }
    return true;
}

double oracle_max_difference(const DenseOracle& o, const ParaLinearOperator& t) {
    return max_abs(o.full - t.matrix());
}

}  // namespace octopara
