#pragma once

#include "projkernel/config.hpp"
#include "projkernel/discrete.hpp"
#include "projkernel/dispersion.hpp"
#include "projkernel/identity_suite.hpp"
#include "projkernel/kernels.hpp"
#include "projkernel/quadrature.hpp"
#include "projkernel/report.hpp"
#include "projkernel/signal_io.hpp"
#include "projkernel/version.hpp"
