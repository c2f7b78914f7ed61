// Umbrella header.
#pragma once

#include "bigint.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "modint.hpp"
#include "partitions.hpp"
#include "qfunctions.hpp"
#include "report.hpp"
#include "series.hpp"
#include "verifier.hpp"
