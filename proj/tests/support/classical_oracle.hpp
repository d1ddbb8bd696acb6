#pragma once

// Independent classical (alpha = id) Hochschild implementation, written
// directly from the textbook tensor formulas with plain index loops. It
// shares only the container types with the main library — none of the
// operadic / comp-module machinery — and serves as an oracle for the
// classical limit of every operator.

#include "homcalc/chain.hpp"
#include "homcalc/cochain.hpp"

namespace homcalc::classical {

// All functions require alg.alpha() == id and throw std::invalid_argument
// otherwise.

// Hochschild coboundary, algebra coefficients:
// (delta f)(a_1..a_{p+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
//                           + (-1)^{p+1} f(a_1..a_p) a_{p+1}.
Cochain delta(const HomAlgebra& alg, const Cochain& f);

// Hochschild boundary:
// b(a_0 x .. x a_n) = sum_{i<n} (-1)^i (.. a_i a_{i+1} ..)
//                     + (-1)^n (a_n a_0) x a_1 .. a_{n-1}.
Chain boundary(const HomAlgebra& alg, const Chain& x);

// Gerstenhaber insertion (f o_i g)(..) = f(.., g(a_i..a_{i+q-1}), ..).
Cochain insert(const HomAlgebra& alg, const Cochain& f, int i, const Cochain& g);

// Cup product in the library's convention, g on the first q arguments:
// (f u g)(a_1..a_{p+q}) = g(a_1..a_q) f(a_{q+1}..a_{p+q}).
Cochain cup(const HomAlgebra& alg, const Cochain& f, const Cochain& g);

// Gerstenhaber bracket [f,g] = f `o` g - (-1)^{(p-1)(q-1)} g `o` f with
// f `o` g = sum_i (-1)^{(q-1)(i-1)} f o_i g.
Cochain bracket(const HomAlgebra& alg, const Cochain& f, const Cochain& g);

// Cap product i_f(a_0 x a_1..a_n) = (a_0 f(a_1..a_p)) x a_{p+1}..a_n.
Chain cap(const HomAlgebra& alg, const Cochain& f, const Chain& x);

// Lie derivative on chains (deg f <= deg x), inner insertions plus cyclic
// wrap-around terms.
Chain lie(const HomAlgebra& alg, const Cochain& f, const Chain& x);

// Connes boundary operator (unital algebras).
Chain connes(const HomAlgebra& alg, const Chain& x);

}  // namespace homcalc::classical
