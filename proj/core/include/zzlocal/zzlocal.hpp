#pragma once

#include "zzlocal/complex.hpp"
#include "zzlocal/diagram.hpp"
#include "zzlocal/distortion.hpp"
#include "zzlocal/errors.hpp"
#include "zzlocal/gf2.hpp"
#include "zzlocal/levelset.hpp"
#include "zzlocal/metric_graph.hpp"
#include "zzlocal/multiparam.hpp"
#include "zzlocal/parallel.hpp"
#include "zzlocal/rational.hpp"
#include "zzlocal/zigzag.hpp"
