#pragma once

#include "lrc/algebra.hpp"
#include "lrc/ce_complex.hpp"
#include "lrc/combinatorics.hpp"
#include "lrc/complex.hpp"
#include "lrc/enveloping.hpp"
#include "lrc/errors.hpp"
#include "lrc/extension.hpp"
#include "lrc/field.hpp"
#include "lrc/hochschild_serre.hpp"
#include "lrc/lie_rinehart.hpp"
#include "lrc/linalg.hpp"
#include "lrc/matrix.hpp"
#include "lrc/problem.hpp"
#include "lrc/report.hpp"
#include "lrc/rinehart.hpp"
#include "lrc/spectral.hpp"
#include "lrc/version.hpp"
