#pragma once

// Umbrella header.

#include "iyengar/beta.hpp"
#include "iyengar/bounds.hpp"
#include "iyengar/corpus.hpp"
#include "iyengar/errors.hpp"
#include "iyengar/functions.hpp"
#include "iyengar/gauss.hpp"
#include "iyengar/interval.hpp"
#include "iyengar/means.hpp"
#include "iyengar/quadrature.hpp"
#include "iyengar/report.hpp"
#include "iyengar/verify.hpp"
