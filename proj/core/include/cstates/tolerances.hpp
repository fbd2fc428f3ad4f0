#pragma once

#include <optional>

namespace cstates {

// Default pass thresholds for the verification suites. A single override (--tol) replaces
// every entry for a run.
struct ToleranceTable {
  // ladder / fockspace
  double hermiticity = 0.0;  // a+ is built as the conjugate of a-, so equality is exact
  double ladder = 1e-12;
  double rs_inequality = 1e-10;
  double gis_equation = 1e-9;
  // gazeau_klauder
  double gk_eigen = 1e-9;
  double gk_tail = 1e-12;
  double action = 1e-8;
  double temporal = 1e-13;
  double pt_norm = 1e-9;
  double gk_moment = 1e-6;
  double bargmann_multiplication = 1e-10;
  // perelomov
  double cn_agreement = 1e-7;
  double ho_norm = 1e-10;
  double state_norm = 1e-10;
  double disk_moment = 1e-8;
  double disk_kernel = 1e-12;
  double disk_reproducing = 1e-6;
  // intelligent
  double gis_closed = 1e-10;
  double rs_equality = 1e-8;
  double rs_ratio = 1e-8;
  double coherent = 1e-8;
  double harmonic_vacuum = 1e-10;
  double bargmann_taylor = 1e-8;
  double kummer = 1e-10;
  double lambda_limit = 1e-6;
  double disk_taylor = 1e-8;
  double laplace = 1e-6;
  // poschl_teller_position
  double gram = 1e-8;
  double riccati = 1e-8;
  double finite_difference = 1e-4;
  double rayleigh = 1e-3;
  double overlap_row = 1e-4;
  double partner = 1e-6;
  // specfun
  double special_kummer = 1e-10;
  double wronskian = 1e-9;
  double jacobi_symmetry = 1e-11;
  double quadrature = 1e-12;

  static ToleranceTable defaults() { return {}; }

  template <class F>
  void for_each(F&& f) {
    double* fields[] = {&hermiticity,     &ladder,          &rs_inequality,
                        &gis_equation,    &gk_eigen,        &gk_tail,
                        &action,          &temporal,        &pt_norm,
                        &gk_moment,       &bargmann_multiplication,
                        &cn_agreement,    &ho_norm,         &state_norm,
                        &disk_moment,     &disk_kernel,     &disk_reproducing,
                        &gis_closed,      &rs_equality,     &rs_ratio,
                        &coherent,        &harmonic_vacuum, &bargmann_taylor,
                        &kummer,          &lambda_limit,    &disk_taylor,
                        &laplace,         &gram,            &riccati,
                        &finite_difference, &rayleigh,      &overlap_row,
                        &partner,         &special_kummer,  &wronskian,
                        &jacobi_symmetry, &quadrature};
    for (double* p : fields) f(*p);
  }

  ToleranceTable with_override(std::optional<double> tol) const {
    ToleranceTable t = *this;
    if (tol) t.for_each([&](double& v) { v = *tol; });
    return t;
  }
};

}  // namespace cstates
