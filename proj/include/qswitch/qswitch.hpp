#pragma once

// Umbrella header: the full quantum-switch coherence toolkit.

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/switch_model.hpp"
#include "qswitch/noise_model.hpp"
#include "qswitch/coherence.hpp"
#include "qswitch/estimator.hpp"
#include "qswitch/sweep.hpp"
