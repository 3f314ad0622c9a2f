#pragma once

#include "cdcodes/cd_algebra.hpp"
#include "cdcodes/codes.hpp"
#include "cdcodes/config_io.hpp"
#include "cdcodes/dyadic.hpp"
#include "cdcodes/harness.hpp"
#include "cdcodes/modular.hpp"
#include "cdcodes/residue.hpp"
#include "cdcodes/rng.hpp"
#include "cdcodes/search.hpp"
#include "cdcodes/vring.hpp"
