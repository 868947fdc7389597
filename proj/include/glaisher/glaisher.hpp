#ifndef GLAISHER_GLAISHER_HPP
#define GLAISHER_GLAISHER_HPP

#include "glaisher/bigreal.hpp"
#include "glaisher/constants.hpp"
#include "glaisher/errors.hpp"
#include "glaisher/gauss_legendre.hpp"
#include "glaisher/identities.hpp"
#include "glaisher/oscillatory.hpp"
#include "glaisher/representations.hpp"
#include "glaisher/series_result.hpp"
#include "glaisher/special_functions.hpp"
#include "glaisher/zeta.hpp"

#endif
