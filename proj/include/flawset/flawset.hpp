#pragma once

#include "bigint.hpp"
#include "bijections.hpp"
#include "closed_forms.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "prefset.hpp"
#include "query.hpp"
#include "recurrences.hpp"
#include "render.hpp"
#include "report.hpp"
#include "series.hpp"
#include "statistics.hpp"
#include "table1.hpp"
#include "verify.hpp"
