#pragma once

// Umbrella header.

#include <suffree/atoms.hpp>
#include <suffree/dfa.hpp>
#include <suffree/error.hpp>
#include <suffree/io.hpp>
#include <suffree/language_ops.hpp>
#include <suffree/semigroup.hpp>
#include <suffree/state_set.hpp>
#include <suffree/transformation.hpp>
#include <suffree/verify.hpp>
#include <suffree/witnesses.hpp>
