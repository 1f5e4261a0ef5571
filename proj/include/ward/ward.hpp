#ifndef WARD_WARD_HPP
#define WARD_WARD_HPP

#include <ward/error.hpp>
#include <ward/rational.hpp>
#include <ward/poly.hpp>
#include <ward/scalar.hpp>
#include <ward/psi_context.hpp>
#include <ward/product_chain.hpp>
#include <ward/series.hpp>
#include <ward/operator_algebra.hpp>
#include <ward/calculus.hpp>

#endif
