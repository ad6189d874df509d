#pragma once

namespace edrb {

/// Lower real branch W_{-1} of the Lambert W function: the solution w <= -1
/// of w * exp(w) = x for x in [-1/e, 0). Throws DomainError outside that range.
double lambert_w_minus1(double x);

/// Same branch, taking L = log(-x). Accepts arguments so close to zero that x
/// itself underflows (L below about -745), which the AWGN closed forms hit at
/// short range.
double lambert_w_minus1_from_log(double log_neg_x);

}  // namespace edrb
