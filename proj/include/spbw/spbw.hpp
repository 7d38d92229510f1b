// Umbrella header for the whole library.
#pragma once

#include "bases.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "homalg.hpp"
#include "inverses.hpp"
#include "involution.hpp"
#include "io.hpp"
#include "module.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "syzygy.hpp"
