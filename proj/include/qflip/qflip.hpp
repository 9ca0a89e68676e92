#ifndef QFLIP_QFLIP_HPP
#define QFLIP_QFLIP_HPP

#include "qflip/bloch.hpp"
#include "qflip/constructions.hpp"
#include "qflip/cubic.hpp"
#include "qflip/experiments.hpp"
#include "qflip/linalg.hpp"
#include "qflip/majorization.hpp"
#include "qflip/report.hpp"
#include "qflip/sweep.hpp"

#endif  // QFLIP_QFLIP_HPP
