
#pragma once

#include <hyperdist/conic.hpp>
#include <hyperdist/construct.hpp>
#include <hyperdist/distance.hpp>
#include <hyperdist/elliptic.hpp>
#include <hyperdist/error.hpp>
#include <hyperdist/rational.hpp>
#include <hyperdist/surface.hpp>
