#pragma once

#include "toric/integer.hpp"
#include "toric/linalg/complex.hpp"
#include "toric/linalg/fin_ab_group.hpp"
#include "toric/linalg/lattice.hpp"
#include "toric/linalg/matrix.hpp"
#include "toric/linalg/normal_form.hpp"
