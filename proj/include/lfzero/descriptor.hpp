#pragma once

#include <complex>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "lfzero/coeffs.hpp"

namespace lfzero {

// One Gamma(lambda s + mu) factor of the completed functional equation.
struct GammaFactor {
    double lambda = 0.0;
    std::complex<double> mu = 0.0;
};

// Functional-equation data of one Selberg-class function; every derived
// invariant (degree, conductor, counting constants) comes from here.
struct SelbergDescriptor {
    std::string name;
    double q_scale = 0.0;                     // the Q of the completed form
    std::complex<double> root_number = 1.0;   // omega, |omega| = 1
    int pole_order = 0;                       // m_F
    std::vector<GammaFactor> gamma_factors;
    std::string coeffs_spec;                  // "zeta" or "dirichlet:<q>:<i>"
    std::shared_ptr<const CoeffProvider> coeffs;
};

// Throws DomainError on any violated field invariant.
void validate(const SelbergDescriptor& desc);

// d_F = 2 sum_j lambda_j.
double degree(const SelbergDescriptor& desc);

// log q_F = d_F log 2pi + 2 log Q + sum_j 2 lambda_j log lambda_j;
// accumulated in log space so large degrees cannot overflow.
double log_conductor(const SelbergDescriptor& desc);
double conductor(const SelbergDescriptor& desc);

// N_F(T) ~ (d_F / 2pi) T log T + c1 T.
struct CountingConstants {
    double c1 = 0.0;
    double degree = 0.0;
    double conductor = 0.0;
};
CountingConstants counting_constants(const SelbergDescriptor& desc);
double counting_main_term(const SelbergDescriptor& desc, double T);

// Reads the line-oriented `key = value` descriptor format; resolves the
// coefficient provider relative to the descriptor's directory (or base_dir
// for the text variant).  Unknown keys are rejected.
SelbergDescriptor parse_descriptor(const std::filesystem::path& path);
SelbergDescriptor parse_descriptor_text(const std::string& text,
                                        const std::string& origin,
                                        const std::filesystem::path& base_dir);

}  // namespace lfzero
