#pragma once

#include "cclm/competence.hpp"
#include "cclm/error.hpp"
#include "cclm/kv_format.hpp"
#include "cclm/lang_graph.hpp"
#include "cclm/sampling.hpp"
#include "cclm/scheduler.hpp"
#include "cclm/sim_trainer.hpp"
#include "cclm/trace.hpp"
#include "cclm/trainer.hpp"
