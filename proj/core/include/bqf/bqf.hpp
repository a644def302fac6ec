#pragma once

#include "bqf/class_enumeration.hpp"
#include "bqf/forms.hpp"
#include "bqf/geometry.hpp"
#include "bqf/integer.hpp"
#include "bqf/modular_group.hpp"
#include "bqf/quad_field.hpp"
#include "bqf/reduction.hpp"
#include "bqf/residues.hpp"
