#pragma once

#include "moncurve/curve.hpp"
#include "moncurve/family.hpp"
#include "moncurve/ideal.hpp"
#include "moncurve/invariants.hpp"
#include "moncurve/io.hpp"
