#pragma once

#include "evb/character_table.hpp"
#include "evb/circle_action.hpp"
#include "evb/class_function.hpp"
#include "evb/classifier.hpp"
#include "evb/errors.hpp"
#include "evb/extensions.hpp"
#include "evb/group.hpp"
#include "evb/input.hpp"
#include "evb/modp.hpp"
#include "evb/orthogonal.hpp"
#include "evb/permutation.hpp"
#include "evb/presentation.hpp"
#include "evb/rational.hpp"
#include "evb/real_irreducible.hpp"
#include "evb/render.hpp"
#include "evb/selfcheck.hpp"
#include "evb/subgroup_scan.hpp"
