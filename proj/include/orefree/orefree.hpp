#pragma once

#include "orefree/dispersion.hpp"
#include "orefree/freeness.hpp"
#include "orefree/instance.hpp"
#include "orefree/partial_fractions.hpp"
#include "orefree/quaternion.hpp"
#include "orefree/sigma_equation.hpp"
#include "orefree/specialization.hpp"
#include "orefree/words_language.hpp"
