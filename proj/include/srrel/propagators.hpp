#pragma once

#include <complex>
#include <vector>

#include "srrel/kernel.hpp"
#include "srrel/params.hpp"

namespace srrel {

/// Singly excited propagators U_{1;1} (= U_{2;2}), U_{1;2} (= U_{2;1}) and the doubly
/// excited U_{e;e} on a q-grid.
struct PropagatorSet {
    QGrid grid;
    std::vector<std::complex<double>> u11;
    std::vector<std::complex<double>> u12;
    std::vector<std::complex<double>> uee;  ///< exp(-2 q), real
};

/// Thrown when the stepper produces a non-finite state.
class PropagatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Classical RK4 on
///   dU11/dq = -U11 - C(q) U12,   dU12/dq = -U12 - C(q) U11,   U11(0) = 1, U12(0) = 0,
/// taking C at q_j, q_j + dq/2 and q_j + dq from the table.
PropagatorSet integrate_rk4(const KernelTable& table);

/// Closed form through the sum and difference modes S = U11 + U12 = exp(-q - I(q)) and
/// D = U11 - U12 = exp(-q + I(q)), I(q) = Int_0^q C. I is accumulated with Simpson's rule
/// on the table's full and half-step samples. Shares nothing with the RK4 path but the table.
PropagatorSet analytic_solution(const KernelTable& table);

/// exp(-2 q) on the grid.
std::vector<std::complex<double>> doubly_excited_propagator(const QGrid& grid);

/// Largest pointwise |a - b| over u11 and u12.
double max_deviation(const PropagatorSet& a, const PropagatorSet& b);

}  // namespace srrel
