#include "gew/assembly.hpp"

#include "gew/errors.hpp"

#include <cmath>
#include <sstream>

namespace gew {

ElementMatrices element_matrices() {
    ElementMatrices em;
    em.A = {{{3.0 / 12.0, 8.0 / 12.0, 1.0 / 12.0}, {1.0 / 12.0, 8.0 / 12.0, 3.0 / 12.0}}};
    em.B = {{{1.0, 0.0, -1.0}, {-1.0, 0.0, 1.0}}};
    em.C = {{{2.0, -2.0, 0.0}, {0.0, -2.0, 2.0}}};
    em.D = {{{-2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {-1.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0}}};
    return em;
}

double lambda_element(const SplineVec& delta, int m, const GewParams& params) {
    const int n = delta.mesh().n_elems();
    if (m < 0 || m >= n) {
        std::ostringstream msg;
        msg << "lambda_element: element " << m << " outside [0, " << n - 1 << "]";
        throw ContractError(msg.str());
    }
    const double sum = delta[m - 1] + 2.0 * delta[m] + delta[m + 1];
    return params.eps / (std::ldexp(1.0, params.p) * delta.mesh().h()) * std::pow(sum, params.p);
}

std::vector<double> element_lambdas(const SplineVec& delta, const GewParams& params) {
    const int n = delta.mesh().n_elems();
    std::vector<double> lam(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) lam[static_cast<std::size_t>(m)] = lambda_element(delta, m, params);
    return lam;
}

RowStencil global_row(int m, int n_elems, double beta, double lambda1, double lambda2, double dt) {
    static const ElementMatrices em = element_matrices();
    RowStencil row;
    const auto add = [&](int elem_row, int offset, double lambda) {
        for (int j = 0; j < 3; ++j) {
            const auto r = static_cast<std::size_t>(elem_row);
            const auto c = static_cast<std::size_t>(j);
            const double mass = em.A[r][c] + beta * (em.B[r][c] - em.C[r][c]);
            const double conv = 0.5 * dt * lambda * em.D[r][c];
            row.lhs[static_cast<std::size_t>(offset + j)] += mass + conv;
            row.rhs[static_cast<std::size_t>(offset + j)] += mass - conv;
        }
    };
    if (m > 0) add(1, 0, lambda1);       // element m-1, L_m is its right weight
    if (m < n_elems) add(0, 1, lambda2); // element m, L_m is its left weight
    return row;
}

std::array<double, 4> gamma_coefficients(double beta, double lambda, double dt) {
    const double ldt = lambda * dt;
    return {1.0 / 12.0 - beta - ldt / 6.0, 11.0 / 12.0 + beta - 3.0 * ldt / 6.0,
            11.0 / 12.0 + beta + 3.0 * ldt / 6.0, 1.0 / 12.0 - beta + ldt / 6.0};
}

double BandedSystem::at(std::size_t row, std::size_t col) const {
    const auto k = static_cast<long>(col) - static_cast<long>(row) + 2;
    if (k < 0 || k > 3) return 0.0;
    return bands[row][static_cast<std::size_t>(k)];
}

std::vector<double> BandedSystem::multiply(std::span<const double> x) const {
    const std::size_t n = size();
    if (x.size() != n) throw ContractError("BandedSystem::multiply: size mismatch");
    std::vector<double> y(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            const long c = static_cast<long>(r) + static_cast<long>(k) - 2;
            if (c >= 0 && c < static_cast<long>(n)) acc += bands[r][k] * x[static_cast<std::size_t>(c)];
        }
        y[r] = acc;
    }
    return y;
}

BandedSystem assemble_cn_system(const SplineVec& linearization, const SplineVec& current,
                                const GewParams& params, double dt) {
    const Mesh& mesh = current.mesh();
    if (!(linearization.mesh() == mesh))
        throw ContractError("assemble_cn_system: linearization and current live on different meshes");
    const int n = mesh.n_elems();
    if (n < 3) throw ConfigError("assemble_cn_system: need at least 3 elements");
    if (!(dt >= 0.0)) throw ConfigError("assemble_cn_system: dt must be non-negative");

    const double beta = params.mu / (mesh.h() * mesh.h());
    const std::vector<double> lam = element_lambdas(linearization, params);

    BandedSystem sys;
    sys.bands.resize(static_cast<std::size_t>(n));
    sys.rhs.resize(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const double l1 = m > 0 ? lam[static_cast<std::size_t>(m - 1)] : 0.0;
        const double l2 = lam[static_cast<std::size_t>(m)];
        const RowStencil row = global_row(m, n, beta, l1, l2, dt);

        double rhs = 0.0;
        for (int k = 0; k < 4; ++k) {
            const int j = m - 2 + k;
            if (j >= -1) rhs += row.rhs[static_cast<std::size_t>(k)] * current[j];
        }
        sys.rhs[static_cast<std::size_t>(m)] = rhs;

        std::array<double, 4> band = row.lhs;
        if (m == 0) {
            // delta_{-1} = -delta_0; position 0 (delta_{-2}) is empty on row 0
            band[2] -= band[1];
            band[1] = 0.0;
        } else if (m == 1) {
            band[1] -= band[0];
            band[0] = 0.0;
        }
        if (m == n - 1) {
            // delta_N = -delta_{N-1}
            band[2] -= band[3];
            band[3] = 0.0;
        }
        sys.bands[static_cast<std::size_t>(m)] = band;
    }
    return sys;
}

SplineVec expand_free(const Mesh& mesh, std::span<const double> free) {
    const int n = mesh.n_elems();
    if (free.size() != static_cast<std::size_t>(n)) throw ContractError("expand_free: need N free coefficients");
    SplineVec delta(mesh);
    for (int j = 0; j < n; ++j) delta[j] = free[static_cast<std::size_t>(j)];
    delta[-1] = -delta[0];
    delta[n] = -delta[n - 1];
    return delta;
}

} // namespace gew
