#pragma once

#include "permob/errors.hpp"
#include "permob/perm.hpp"
#include "permob/embed.hpp"
#include "permob/structure.hpp"
#include "permob/families.hpp"
#include "permob/poset.hpp"
#include "permob/engines.hpp"
#include "permob/zero_rules.hpp"
#include "permob/decomposable.hpp"
#include "permob/contributing.hpp"
#include "permob/oscillation.hpp"
#include "permob/balloon.hpp"
#include "permob/dispatch.hpp"
#include "permob/census.hpp"
#include "permob/cache.hpp"
