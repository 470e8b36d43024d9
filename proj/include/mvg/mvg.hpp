#pragma once

#include "mvg/error.hpp"
#include "mvg/truth_algebra.hpp"
#include "mvg/mv_sets.hpp"
#include "mvg/polarity.hpp"
#include "mvg/graph_frame.hpp"
#include "mvg/formula.hpp"
#include "mvg/model.hpp"
#include "mvg/analysis.hpp"
#include "mvg/frame_file.hpp"
#include "mvg/render.hpp"
#include "mvg/case_study.hpp"
#include "mvg/cli.hpp"
