#ifndef ROUGHPHISH_CORE_HPP
#define ROUGHPHISH_CORE_HPP

#include "roughphish/core/approximation.hpp"
#include "roughphish/core/csv.hpp"
#include "roughphish/core/decision_table.hpp"
#include "roughphish/core/dependency.hpp"
#include "roughphish/core/errors.hpp"
#include "roughphish/core/fraction.hpp"
#include "roughphish/core/object_set.hpp"
#include "roughphish/core/reducts.hpp"
#include "roughphish/core/rules.hpp"

#endif
