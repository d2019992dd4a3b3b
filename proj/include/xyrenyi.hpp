#ifndef XYRENYI_HPP
#define XYRENYI_HPP

#include <xyrenyi/elliptic_core.hpp>
#include <xyrenyi/errors.hpp>
#include <xyrenyi/modular.hpp>
#include <xyrenyi/renyi.hpp>
#include <xyrenyi/result.hpp>
#include <xyrenyi/series_oracle.hpp>
#include <xyrenyi/sweep.hpp>
#include <xyrenyi/theta.hpp>
#include <xyrenyi/verify.hpp>

#endif
