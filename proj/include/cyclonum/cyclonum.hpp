#ifndef CYCLONUM_CYCLONUM_HPP
#define CYCLONUM_CYCLONUM_HPP

#include "cyclo_integers.hpp"
#include "cyclotomy.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "harness.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "serialization.hpp"
#include "transfer.hpp"
#include "vanishing_sums.hpp"

#endif
