#pragma once

#include "opow/automata.hpp"
#include "opow/classify.hpp"
#include "opow/corpus.hpp"
#include "opow/dict.hpp"
#include "opow/engine.hpp"
#include "opow/rank.hpp"
#include "opow/reductions.hpp"
#include "opow/streams.hpp"
#include "opow/words.hpp"
