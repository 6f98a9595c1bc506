#include "srrel/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace srrel {

namespace {

struct State {
    std::complex<double> u11;
    std::complex<double> u12;
};

State derivative(std::complex<double> c, const State& s)
{
    return {-s.u11 - c * s.u12, -s.u12 - c * s.u11};
}

State axpy(const State& s, double h, const State& k) { return {s.u11 + h * k.u11, s.u12 + h * k.u12}; }

}  // namespace

std::vector<std::complex<double>> doubly_excited_propagator(const QGrid& grid)
{
    std::vector<std::complex<double>> uee(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) uee[j] = std::exp(-2.0 * grid.at(j));
    return uee;
}

PropagatorSet integrate_rk4(const KernelTable& table)
{
    const QGrid& grid = table.grid;
    if (table.values.size() != grid.n || table.midpoints.size() + 1 != grid.n)
        throw std::invalid_argument("kernel table does not cover the grid and its midpoints");

    PropagatorSet out;
    out.grid = grid;
    out.u11.resize(grid.n);
    out.u12.resize(grid.n);
    out.uee = doubly_excited_propagator(grid);

    const double h = grid.dq;
    State s{1.0, 0.0};
    out.u11[0] = s.u11;
    out.u12[0] = s.u12;
    for (std::size_t j = 0; j + 1 < grid.n; ++j) {
        const auto c0 = table.values[j];
        const auto cm = table.midpoints[j];
        const auto c1 = table.values[j + 1];
        const State k1 = derivative(c0, s);
        const State k2 = derivative(cm, axpy(s, 0.5 * h, k1));
        const State k3 = derivative(cm, axpy(s, 0.5 * h, k2));
        const State k4 = derivative(c1, axpy(s, h, k3));
        s.u11 += (h / 6.0) * (k1.u11 + 2.0 * k2.u11 + 2.0 * k3.u11 + k4.u11);
        s.u12 += (h / 6.0) * (k1.u12 + 2.0 * k2.u12 + 2.0 * k3.u12 + k4.u12);
        if (!std::isfinite(std::abs(s.u11)) || !std::isfinite(std::abs(s.u12))) {
            std::ostringstream os;
            os << "RK4 produced a non-finite propagator at q=" << grid.at(j + 1)
               << " (beta=" << table.beta << ", delta=" << table.delta << ")";
            throw PropagatorError(os.str());
        }
        out.u11[j + 1] = s.u11;
        out.u12[j + 1] = s.u12;
    }
    return out;
}

PropagatorSet analytic_solution(const KernelTable& table)
{
    const QGrid& grid = table.grid;
    if (table.values.size() != grid.n || table.midpoints.size() + 1 != grid.n)
        throw std::invalid_argument("kernel table does not cover the grid and its midpoints");

    PropagatorSet out;
    out.grid = grid;
    out.u11.resize(grid.n);
    out.u12.resize(grid.n);
    out.uee = doubly_excited_propagator(grid);

    std::complex<double> integral{0.0, 0.0};
    for (std::size_t j = 0; j < grid.n; ++j) {
        if (j > 0)
            integral += (grid.dq / 6.0) *
                        (table.values[j - 1] + 4.0 * table.midpoints[j - 1] + table.values[j]);
        const double q = grid.at(j);
        const auto sum_mode = std::exp(-q - integral);
        const auto diff_mode = std::exp(-q + integral);
        out.u11[j] = 0.5 * (sum_mode + diff_mode);
        out.u12[j] = 0.5 * (sum_mode - diff_mode);
    }
    return out;
}

double max_deviation(const PropagatorSet& a, const PropagatorSet& b)
{
    if (a.u11.size() != b.u11.size()) throw std::invalid_argument("propagator grids differ");
    double worst = 0.0;
    for (std::size_t j = 0; j < a.u11.size(); ++j) {
        worst = std::max(worst, std::abs(a.u11[j] - b.u11[j]));
        worst = std::max(worst, std::abs(a.u12[j] - b.u12[j]));
    }
    return worst;
}

}  // namespace srrel
