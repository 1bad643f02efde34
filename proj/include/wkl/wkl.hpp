#pragma once

// Umbrella header for the whole library.

#include "wkl/errors.hpp"
#include "wkl/rational.hpp"
#include "wkl/matrix.hpp"
#include "wkl/liecore.hpp"
#include "wkl/affweyl.hpp"
#include "wkl/laurent.hpp"
#include "wkl/coxeter.hpp"
#include "wkl/hecke.hpp"
#include "wkl/qseries.hpp"
#include "wkl/characters.hpp"
#include "wkl/sugawara.hpp"
#include "wkl/wstruct.hpp"
#include "wkl/cli.hpp"
