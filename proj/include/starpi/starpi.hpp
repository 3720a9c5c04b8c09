#pragma once

#include "starpi/algebra.hpp"
#include "starpi/algebra_io.hpp"
#include "starpi/catalog.hpp"
#include "starpi/envelope.hpp"
#include "starpi/grassmann.hpp"
#include "starpi/identities.hpp"
#include "starpi/linalg.hpp"
#include "starpi/parse.hpp"
#include "starpi/poly.hpp"
#include "starpi/rational.hpp"
#include "starpi/sampler.hpp"
#include "starpi/tideal.hpp"
#include "starpi/transforms.hpp"
#include "starpi/z4.hpp"
