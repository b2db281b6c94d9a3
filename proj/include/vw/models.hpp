#pragma once

#include <string>

#include "vw/json_writer.hpp"

namespace vw {

enum class PotentialFamily { Harmonic, Quartic, Power2n, CubicQuartic };

/// One oscillator Hamiltonian H = -1/2 d^2/dx^2 + V(x) per coordinate,
/// in units hbar = m = omega = 1.
///
///   Harmonic      V(x) = x^2/2
///   Quartic       V(x) = x^2/2 + lambda x^4
///   Power2n       V(x) = x^2/2 + lambda x^(2n)
///   CubicQuartic  V(x) = x^2/2 + lambda x^3 + mu x^4
struct ModelSpec {
    PotentialFamily family = PotentialFamily::Harmonic;
    double lambda = 0.0;
    double mu = 0.0;
    int power = 2;  // n, Power2n only
    int dim = 1;
};

struct Couplings {
    double lambda = 0.0;
    double mu = 0.0;
    int power = 2;
};

/// Validates couplings against the family invariants and returns the model.
/// Throws std::invalid_argument on: lambda < 0 for Quartic/Power2n,
/// mu <= 0 for CubicQuartic, power < 2, dim < 1.
ModelSpec make_model(PotentialFamily family, const Couplings& c, int dim);

ModelSpec harmonic_model(int dim = 1);
ModelSpec quartic_model(double lambda, int dim = 1);
ModelSpec power_model(int n, double lambda, int dim = 1);
ModelSpec cubic_quartic_model(double lambda, double mu, int dim = 1);

/// Single-coordinate potential V(x); d-dimensional callers sum over coordinates.
double potential_value(const ModelSpec& model, double x);

/// Product-ansatz total energy for d identical modes: d * e1.
double dimension_total_energy(int d, double e1);

/// True when V(x) = V(-x) for this model (CubicQuartic with lambda != 0 is odd-broken).
bool is_even_potential(const ModelSpec& model);

std::string family_name(PotentialFamily family);
PotentialFamily family_from_name(const std::string& name);

/// Width restoration for the dimensional harmonic oscillator: the
/// dimensionless optimum alpha maps to alpha_phys = (m omega / hbar) * alpha.
double physical_width(double mass, double omega, double hbar, double alpha_dimensionless);

Json to_json(const ModelSpec& model);

}  // namespace vw
