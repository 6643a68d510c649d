#pragma once

#include "dhga/blade.hpp"
#include "dhga/dh_operator.hpp"
#include "dhga/error.hpp"
#include "dhga/inverse.hpp"
#include "dhga/io.hpp"
#include "dhga/linalg.hpp"
#include "dhga/lorentz.hpp"
#include "dhga/multivector.hpp"
#include "dhga/polynomial.hpp"
#include "dhga/qprime.hpp"
#include "dhga/random.hpp"
#include "dhga/rational.hpp"
#include "dhga/scalar.hpp"
#include "dhga/spinor_ideal.hpp"
#include "dhga/suites.hpp"
