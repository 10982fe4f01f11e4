#pragma once

#include "tropdepth/poly.hpp"
#include "tropdepth/text.hpp"
#include "tropdepth/groebner.hpp"
#include "tropdepth/monomial_ideal.hpp"
#include "tropdepth/transform.hpp"
#include "tropdepth/invariants.hpp"
#include "tropdepth/fans.hpp"
#include "tropdepth/generic.hpp"
#include "tropdepth/tropmult.hpp"
#include "tropdepth/ideal_file.hpp"
#include "tropdepth/report.hpp"
