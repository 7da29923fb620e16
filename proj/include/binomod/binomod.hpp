#pragma once

#include "binomod/binom.hpp"
#include "binomod/field.hpp"
#include "binomod/period.hpp"
#include "binomod/render.hpp"
#include "binomod/report.hpp"
#include "binomod/scan.hpp"
#include "binomod/subgroup_analysis.hpp"
#include "binomod/verify.hpp"
