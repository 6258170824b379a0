#ifndef ZLAB_ZLAB_HPP
#define ZLAB_ZLAB_HPP

#include "core.hpp"
#include "log_gamma.hpp"
#include "quadrature.hpp"
#include "incomplete_gamma.hpp"
#include "qseries.hpp"
#include "lerch.hpp"
#include "theta.hpp"
#include "greens.hpp"
#include "transitions.hpp"
#include "statmech.hpp"
#include "zeros.hpp"
#include "stringseries.hpp"
#include "scan.hpp"

#endif
