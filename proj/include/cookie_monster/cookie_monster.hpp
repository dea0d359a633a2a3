#ifndef COOKIE_MONSTER_COOKIE_MONSTER_HPP
#define COOKIE_MONSTER_COOKIE_MONSTER_HPP

#include "cookie_monster/core.hpp"
#include "cookie_monster/bounds.hpp"
#include "cookie_monster/exact.hpp"
#include "cookie_monster/heuristics.hpp"
#include "cookie_monster/sequences.hpp"
#include "cookie_monster/io.hpp"
#include "cookie_monster/bench.hpp"

#endif
