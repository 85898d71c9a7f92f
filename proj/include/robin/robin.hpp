#ifndef ROBIN_ROBIN_HPP
#define ROBIN_ROBIN_HPP

// Umbrella header for the whole library.

#include "robin/commands.hpp"
#include "robin/continuation.hpp"
#include "robin/csv.hpp"
#include "robin/errors.hpp"
#include "robin/maass_selberg.hpp"
#include "robin/modular_surface.hpp"
#include "robin/numerics.hpp"
#include "robin/robin_maps.hpp"
#include "robin/root_finding.hpp"
#include "robin/special_functions.hpp"
#include "robin/verify.hpp"

#endif
