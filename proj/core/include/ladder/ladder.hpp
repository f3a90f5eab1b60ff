#pragma once

#include "ladder/builtins.hpp"
#include "ladder/enumeration.hpp"
#include "ladder/errors.hpp"
#include "ladder/game.hpp"
#include "ladder/game_io.hpp"
#include "ladder/influence.hpp"
#include "ladder/injection.hpp"
#include "ladder/pivot.hpp"
#include "ladder/profile.hpp"
#include "ladder/random_games.hpp"
#include "ladder/reports.hpp"
#include "ladder/sim.hpp"
#include "ladder/verify.hpp"
