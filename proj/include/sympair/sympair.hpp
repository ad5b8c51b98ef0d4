#pragma once

#include "sympair/abelian.hpp"
#include "sympair/checks.hpp"
#include "sympair/core.hpp"
#include "sympair/hreps.hpp"
#include "sympair/localize.hpp"
#include "sympair/oracle.hpp"
#include "sympair/pairs.hpp"
#include "sympair/report.hpp"
#include "sympair/rootdata.hpp"
#include "sympair/series.hpp"
#include "sympair/smith.hpp"
