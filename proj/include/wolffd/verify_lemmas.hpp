#pragma once

#include "wolffd/cauchy_singular.hpp"
#include "wolffd/report.hpp"
#include "wolffd/wolff_solver.hpp"

namespace wolffd {

/// One area-bound ratio int ||Q' w~||^2 dA / ||w||_HD^2 for a fixed w given by
/// one BoundaryFunction per Q column (w~ is the Poisson extension).
double lemma2_ratio(const MultiplierTuple& F, const std::vector<BoundaryFunction>& w,
                    const DiskGrid& grid);

/// Seeded random harmonic polynomials (band <= 16) against the area bound
/// int ||Q' w~||^2 dA <= 8 ||w||_HD^2.  F is rescaled to unit column norm
/// when needed.
VerificationReport verify_lemma2(MultiplierTuple F, int trials, unsigned seed);

/// max over the grid of (1-|z|^2) |phi'(z)| against the truncated op_norm.
VerificationReport verify_lemma4(const AnalyticPoly& phi, const DiskGrid& grid, int N,
                                 const std::string& label = "");

/// The collapse 1/(u-z) + conj(z)/(1-u conj(z)) = (1-|z|^2)/((u-z)(1-u conj(z))).
VerificationReport verify_kernel_identity(const std::vector<std::pair<cplx, cplx>>& samples);

/// ||harmonic extension of (w hat)|dD||_HD^2 <= ||w||_A^2 + ||w hat||_sigma^2
/// for a scalar monomial expansion w.
VerificationReport verify_hd_extension_bound(const MonomialExpansion& w);

/// The five area terms (a')-(e') of the norm estimate, the (alpha) kernel
/// term via the T-operator path, and their companion rows, each against the
/// stated constant (||M_H|| taken at truncation N).
VerificationReport verify_term_estimates(const WolffProblem& p);

/// Boundary bound int ||u_h||^2 dsigma <= 225 ||h||_sigma^2.
VerificationReport verify_boundary_c0(const WolffProblem& p);

/// T-operator suite: closed forms against quadrature, the rotation identity,
/// discretized ||T_l|| for |l| <= l_range, Schur certificates, and the global
/// bound ||Tf||_A^2 <= 100 pi^2 ||f||_A^2 on random expansions.
VerificationReport verify_lemma3(int l_range, int random_trials, unsigned seed);

/// Independent oracle: the Cauchy transform by 2D quadrature in polar
/// coordinates centered at z (the 1/rho singularity cancels the Jacobian).
cplx cauchy_quadrature_oracle(const MonomialExpansion& w, cplx z, int n_phi = 256,
                              int n_rho = 96);

/// Same scheme for (T f)(lam).
cplx T_quadrature_oracle(const MonomialExpansion& f, cplx lam, int n_phi = 256,
                         int n_rho = 96);

}  // namespace wolffd
