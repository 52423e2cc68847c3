#pragma once

#include "ffc/polynomial.hpp"

namespace ffc {

enum class ConvolutionKind { SymAdditive, SymMultiplicative, AsymAdditive };

// Symmetric additive convolution at level d, computed by the factorial-ratio
// coefficient weights. Inputs of unequal degree are reduced with repeated
// (1/d)*Dp steps on the higher-degree side, which keeps monic inputs monic.
// Preconditions: deg p, deg q <= d and max(deg p, deg q) == d.
Polynomial sym_additive(const Polynomial& p, const Polynomial& q, int d,
                        bool validate = false);

// Independent operator form: (1/d!) sum_i (-1)^i (d-i)! b_i p^(i).
// Requires deg p == deg q == d; must agree with sym_additive exactly.
Polynomial sym_additive_deriv_form(const Polynomial& p, const Polynomial& q, int d);

// Symmetric multiplicative convolution: c_i = a_i b_i / binom(d, i), with
// mixed degrees reduced through the polar derivative (1/d)(x*Dp - d*p).
Polynomial sym_multiplicative(const Polynomial& p, const Polynomial& q, int d,
                              bool validate = false);

// Asymmetric additive convolution: squared factorial-ratio weights, with
// mixed degrees reduced through the Laguerre derivative (1/d^2) D x D p.
Polynomial asym_additive(const Polynomial& p, const Polynomial& q, int d,
                         bool validate = false);

// Independent operator form: (1/d!)^2 sum_i (-1)^i ((d-i)!)^2 b_i (DxD)^i p.
// Requires deg p == deg q == d; must agree with asym_additive exactly.
Polynomial asym_additive_laguerre_form(const Polynomial& p, const Polynomial& q, int d);

Polynomial convolve(ConvolutionKind kind, const Polynomial& p, const Polynomial& q,
                    int d, bool validate = false);

}  // namespace ffc
