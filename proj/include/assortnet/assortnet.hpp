#pragma once

#include "assortnet/errors.hpp"
#include "assortnet/graph.hpp"
#include "assortnet/ingest.hpp"
#include "assortnet/metrics.hpp"
#include "assortnet/report.hpp"
#include "assortnet/synth.hpp"
