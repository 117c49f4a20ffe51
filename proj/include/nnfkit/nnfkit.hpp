/// @file  nnfkit.hpp
/// @brief Umbrella include for the whole toolkit.

#pragma once

#include "compile.hpp"
#include "decision.hpp"
#include "families.hpp"
#include "gate.hpp"
#include "io.hpp"
#include "lang.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "queries.hpp"
#include "store.hpp"
#include "transforms.hpp"
#include "types.hpp"
#include "views.hpp"
