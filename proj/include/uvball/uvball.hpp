#pragma once

#include "uvball/asymptotics.hpp"
#include "uvball/ball.hpp"
#include "uvball/errors.hpp"
#include "uvball/gegenbauer.hpp"
#include "uvball/harmonics.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/specfun.hpp"
#include "uvball/uvarov.hpp"
