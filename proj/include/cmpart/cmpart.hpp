// Umbrella header.
#pragma once

#include "cmpart/arith.hpp"
#include "cmpart/block_partition.hpp"
#include "cmpart/cm.hpp"
#include "cmpart/error.hpp"
#include "cmpart/groups.hpp"
#include "cmpart/params.hpp"
#include "cmpart/partitions.hpp"
#include "cmpart/rouquier.hpp"
#include "cmpart/verify.hpp"
