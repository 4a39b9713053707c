#pragma once

#include <polya/errors.hpp>
#include <polya/hyper.hpp>
#include <polya/poly.hpp>
#include <polya/poly3.hpp>
#include <polya/rat.hpp>
#include <polya/ratfunc.hpp>
#include <polya/scan.hpp>
#include <polya/series.hpp>
#include <polya/sfrac.hpp>
#include <polya/symbolic.hpp>
