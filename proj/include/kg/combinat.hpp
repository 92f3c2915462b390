#pragma once

#include <memory>
#include <span>
#include <vector>

#include "kg/rational.hpp"

namespace kg::combinat {

/// n! from a growable memo table. Thread-safe; returns a copy.
ZZ factorial(unsigned n);

/// Integer binomial with the vanishing convention: 0 for k < 0 or k > n.
/// The appendix identity sweeps sum binomials over index windows that run
/// out of range and rely on those terms being zero.
ZZ binom(long long n, long long k);

/// Full row { binom(n,0), ..., binom(n,n) }, cached. Hot loops grab the row
/// once instead of hitting the factorial table per term.
std::shared_ptr<const std::vector<ZZ>> binom_row(unsigned n);

/// Generalized binomial binom(a, k) = a(a-1)...(a-k+1) / k! for rational a.
/// Computed as the explicit falling-factorial product (factorials are
/// undefined for rational arguments); an integer a with 0 <= a < k yields 0
/// because a factor vanishes.
QQ binomial(const QQ& a, unsigned k);

/// binom(2n, n) / (n+1).
QQ catalan(unsigned n);

/// Super Catalan number S(p,q) = (2p)!(2q)! / (p! q! (p+q)!).
QQ super_catalan(unsigned p, unsigned q);

/// T(p,q) = (2p+1)/(p+q+1) * S(p,q) = (2p+1)!(2q)! / (p! q! (p+q+1)!).
QQ t_number(unsigned p, unsigned q);

/// n-th iterated forward difference at 0:
///   sum_v (-1)^{n-v} binom(n,v) f(v).
/// Requires values.size() >= n+1.
QQ forward_difference(std::span<const QQ> values, unsigned n);

/// Test hook: when enabled, binom(6,3) reports 21 instead of 20 so the
/// verification suites can demonstrate their failure path.
void set_binomial_corruption(bool enabled);

}  // namespace kg::combinat
