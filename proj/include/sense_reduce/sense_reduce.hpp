#pragma once
// Umbrella header for the whole library.

#include "sense_reduce/dataset_io.hpp"
#include "sense_reduce/errors.hpp"
#include "sense_reduce/evaluation.hpp"
#include "sense_reduce/matcher.hpp"
#include "sense_reduce/pos.hpp"
#include "sense_reduce/reductions.hpp"
#include "sense_reduce/rng.hpp"
#include "sense_reduce/synthetic.hpp"
#include "sense_reduce/task_model.hpp"
#include "sense_reduce/text.hpp"
#include "sense_reduce/wordnet.hpp"
