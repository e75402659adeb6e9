#ifndef QCORR_QUBIT_HPP
#define QCORR_QUBIT_HPP

#include <Eigen/Dense>
#include <complex>

namespace qcorr {

// Single-qubit basis order is {|1>, |0>} (excited first), so rho(0,0) = rho_11.
// Two-qubit basis order is B = {|11>, |10>, |01>, |00>}, i.e. kron(A, B) with
// the single-qubit order above.
using Qubit = Eigen::Matrix2cd;
using TwoQubit = Eigen::Matrix4cd;
using Complex = std::complex<double>;

namespace pauli {
Eigen::Matrix2cd sigma(int i); // i = 0..3, sigma(0) = identity
}

namespace probe {
Qubit excited();         // |1><1|
Qubit ground();          // |0><0|
Qubit plus_x();          // (|0>+|1>)/sqrt2, rho_10 = +1/2
Qubit plus_y();          // (|0>+i|1>)/sqrt2, rho_10 = +i/2
Qubit maximally_mixed(); // I/2
} // namespace probe

bool is_valid_state(const Qubit& rho, double eig_tol = 1e-12);
bool is_valid_state(const TwoQubit& rho, double eig_tol = 1e-10);
void require_valid_state(const Qubit& rho);   // throws StateError
void require_valid_state(const TwoQubit& rho);

// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const TwoQubit& rho);

} // namespace qcorr

#endif
