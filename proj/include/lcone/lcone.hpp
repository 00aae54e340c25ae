#ifndef LCONE_LCONE_HPP
#define LCONE_LCONE_HPP

#include "lcone/admissible.hpp"
#include "lcone/cartan.hpp"
#include "lcone/common.hpp"
#include "lcone/cone.hpp"
#include "lcone/deformation.hpp"
#include "lcone/enumerate.hpp"
#include "lcone/estimators.hpp"
#include "lcone/io.hpp"
#include "lcone/lp.hpp"
#include "lcone/marked_group.hpp"
#include "lcone/scaled_matrix.hpp"
#include "lcone/subgroups.hpp"
#include "lcone/svg.hpp"

#endif
