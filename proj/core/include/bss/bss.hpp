#pragma once

#include "bss/dataset_io.hpp"
#include "bss/decision.hpp"
#include "bss/error.hpp"
#include "bss/parameter.hpp"
#include "bss/partition.hpp"
#include "bss/soft_set.hpp"
#include "bss/tabular.hpp"
#include "bss/universe.hpp"
