#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpns/norms.hpp"

namespace mpns {

/// One observed two-sided estimate: lhs <= C * rhs_without_constant with the
/// unquantified constant carried as the observed ratio.
struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs_without_constant = 0.0;
    double observed_ratio = 0.0;
    std::string sample;  // descriptor of the input (generator, size, r, ...)
    uint64_t seed = 0;

    std::string to_json_line() const;
};

/// ||f||_{B^r_{2,1}} against ||f||_{L^2}^{1-r} ||grad f||_{L^2}^r, 0 < r < 1.
InequalityCheck check_lemma23(const ScalarField& f, double r);

/// ||fg||_{L^2} (product formed with 2/3-rule margin) against
/// ||f||_{M_{2,3/r}} ||g||_{B^r_{2,1}}.
InequalityCheck check_bilinear(const ScalarField& f, const ScalarField& g, double r,
                               const MorreyParams& mp = {});

/// Anisotropic Gagliardo-Nirenberg: ||f||_{L^gamma} against
/// ||d1 f||_{L^alpha}^{1/3} ||d2 f||_{L^alpha}^{1/3} ||d3 f||_{L^lambda}^{1/3};
/// requires 1 + 3/gamma = 1/lambda + 2/alpha and zero-mean f.
InequalityCheck check_anisotropic_gn(const ScalarField& f, double alpha, double lambda,
                                     double gamma);

/// ||f||_{L^beta} against ||f||_{L^2}^{(6-beta)/2beta} times the three
/// ||di f||_{L^2}^{(beta-2)/2beta} factors; 2 <= beta <= 6, zero-mean f.
InequalityCheck check_lemma25(const ScalarField& f, double beta);

/// Embedding chain L^{3/r} into weak-L^{3/r} into M_{p,3/r}: the two norm
/// ratios along the chain.  Empty for the zero field.
std::vector<InequalityCheck> check_embedding_chain(const ScalarField& f, double r, double p,
                                                   const MorreyParams& mp = {});

}  // namespace mpns
